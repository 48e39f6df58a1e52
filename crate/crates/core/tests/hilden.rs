use hilden_core::braid::{gamma, NamedElement};
use hilden_core::hilden::{
    convention_self_test, identity_catalog, rewrite, standard_gens, three_gens, verify_catalog,
    verify_generation, KMode, Verdict,
};
use hilden_core::lift::{is_liftable, CoverConfig};

#[test]
fn rewriter_is_sound_up_to_n4() {
    for n in 1..=4 {
        for kmode in [KMode::K2, KMode::KGe3] {
            let cfg = CoverConfig::new(n, kmode.representative_k()).unwrap();
            for member in standard_gens(n, kmode).members {
                let target = member.0[0].0;
                let word = rewrite(target, n, kmode).unwrap();
                // only the three letters of the generating set appear
                for tok in word.to_string().split_whitespace() {
                    let base = tok.split('^').next().unwrap();
                    assert!(["A", "SS1", "RR1"].contains(&base), "{tok}");
                }
                let expanded = word.expand(n, kmode).unwrap();
                assert!(
                    gamma(&expanded)
                        .out_equal(&gamma(&target.word(n).unwrap()))
                        .unwrap(),
                    "n={n} {kmode} {target}"
                );
                assert!(is_liftable(&expanded, &cfg).unwrap());
            }
        }
    }
}

#[test]
fn generation_reports_have_expected_sizes() {
    for n in 1..=3 {
        let k2 = verify_generation(n, KMode::K2).unwrap();
        assert_eq!(k2.records.len(), 2 * n + n + 1);
        let k3 = verify_generation(n, KMode::KGe3).unwrap();
        assert_eq!(k3.records.len(), 2 * n + (n + 1) + 1);
        assert!(k2.all_pass && k3.all_pass);
        assert_eq!(k3.generating_set_size, 3);
    }
}

#[test]
fn three_gen_members_lie_in_the_group() {
    for n in 1..=4 {
        let cfg = CoverConfig::new(n, 3).unwrap();
        for g in three_gens(n, KMode::KGe3).members {
            assert!(is_liftable(&g.expand(n).unwrap(), &cfg).unwrap());
        }
        // s σ_1 is not liftable for k ≥ 3
        let a = &three_gens(n, KMode::K2).members[0];
        assert!(!is_liftable(&a.expand(n).unwrap(), &cfg).unwrap());
    }
}

#[test]
fn catalog_passes_and_corruptions_fail() {
    for n in 1..=2 {
        for kmode in [KMode::K2, KMode::KGe3] {
            for rec in verify_catalog(n, kmode).unwrap() {
                assert_eq!(rec.result, Verdict::Pass, "{}", rec.label);
            }
        }
    }
    // Swapping one side of a conjugation identity for another generator breaks it.
    let mut id = identity_catalog(3, KMode::KGe3)
        .into_iter()
        .find(|id| id.label == "s^-1 r1 s^1 = r2")
        .unwrap();
    id.rhs = hilden_core::hilden::Product::one(NamedElement::ArcR(3));
    assert_ne!(
        hilden_core::hilden::verify_identity(&id, 3).unwrap(),
        Verdict::Pass
    );
}

#[test]
fn mirrored_anchor_is_reported() {
    let t = convention_self_test();
    assert_eq!(t.result, Verdict::Pass);
    // the mirrored reading (s σ1) s1 (s σ1)^{-1} does not give s2
    assert!(!t.mirror_holds);
}
