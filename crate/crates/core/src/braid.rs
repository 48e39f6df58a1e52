//! Braid words on `m` strands, their permutations, the named elements of the
//! Hilden and liftable Hilden groups, and evaluation into mapping classes of
//! the `m`-marked sphere.

use std::fmt;

use thiserror::Error;

use crate::free_group::{FreeAut, FreeWord, Letter};
use crate::perm::Perm;

/// Which end of a braid word acts first when it is evaluated as a mapping class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionOrder {
    RightmostFirst,
    LeftmostFirst,
}

impl ActionOrder {
    pub fn flipped(self) -> Self {
        match self {
            ActionOrder::RightmostFirst => ActionOrder::LeftmostFirst,
            ActionOrder::LeftmostFirst => ActionOrder::RightmostFirst,
        }
    }
}

impl fmt::Display for ActionOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionOrder::RightmostFirst => "rightmost-first",
            ActionOrder::LeftmostFirst => "leftmost-first",
        })
    }
}

/// The product `gf` applies `f` first, so the rightmost letter acts first.
pub const CONVENTION: ActionOrder = ActionOrder::RightmostFirst;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator s{index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("{element} is out of range for n = {n}")]
    NamedOutOfRange { element: NamedElement, n: usize },
    #[error("n must be at least 1")]
    ZeroArcs,
    #[error("strand mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

/// A half-twist `σ_i` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn sigma(index: usize) -> Self {
        BraidLetter {
            index,
            inverse: false,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        BraidLetter {
            index,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        BraidLetter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}{}", self.index, if self.inverse { "'" } else { "" })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::IndexOutOfRange {
                index: bad.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Build from signed indices: `2` is `σ_2`, `-2` is `σ_2^{-1}`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self, BraidError> {
        let letters = letters
            .iter()
            .map(|&s| BraidLetter {
                index: s.unsigned_abs() as usize,
                inverse: s < 0,
            })
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> BraidWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Letter order reversed, signs kept.
    pub fn reversed(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Remove adjacent `σ_i σ_i^{-1}` pairs. No braid relations are used.
    pub fn syntactic_cancel(&self) -> BraidWord {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The permutation of the marked points; composed with the same order
    /// convention as [`gamma`].
    pub fn perm(&self) -> Perm {
        let mut p = Perm::identity(self.strands);
        let mut letters: Vec<BraidLetter> = self.letters.clone();
        if CONVENTION == ActionOrder::LeftmostFirst {
            letters.reverse();
        }
        // p ← p ∘ τ for each letter in reading order of the first-to-act-last chain.
        for l in letters {
            p = p.compose(&Perm::transposition(self.strands, l.index, l.index + 1));
        }
        p
    }

    /// `σ_1 σ_2 ⋯ σ_{m-1}`.
    pub fn rotation(strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, (1..strands).map(BraidLetter::sigma).collect())
    }

    /// `(σ_1 ⋯ σ_{m-1})^m`, the generator of the centre of the disk braid group.
    pub fn full_twist(strands: usize) -> Result<BraidWord, BraidError> {
        Ok(BraidWord::rotation(strands)?.pow(strands as i64))
    }

    /// `σ_1 ⋯ σ_{m-1} σ_{m-1} ⋯ σ_1`, trivial on the sphere.
    pub fn sphere_relator(strands: usize) -> Result<BraidWord, BraidError> {
        let r = BraidWord::rotation(strands)?;
        r.concat(&r.reversed())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// Elements of the spherical braid group named in the generating sets, for a
/// configuration of `n + 1` arcs on `2n + 2` strands.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum NamedElement {
    /// `σ_i`, `1 ≤ i ≤ 2n+1`.
    Sigma(usize),
    /// `s_i = σ_{2i} σ_{2i+1} σ_{2i-1} σ_{2i}`, `1 ≤ i ≤ n`.
    ArcS(usize),
    /// `r_i = σ_{2i}^{-1} σ_{2i+1}^{-1} σ_{2i-1} σ_{2i}`, `1 ≤ i ≤ n`.
    ArcR(usize),
    /// `t_j = σ_{2j-1}^2`, `1 ≤ j ≤ n+1`.
    ArcTwist(usize),
    /// `r = σ_1 σ_3 ⋯ σ_{2n+1}`.
    HalfTwistAll,
    /// `s = s_n ⋯ s_2 s_1`.
    CycleArcs,
    /// The full twist on `2n+2` strands.
    FullTwist,
}

impl NamedElement {
    /// Check the index range for `n` arcs-minus-one.
    pub fn validate(self, n: usize) -> Result<(), BraidError> {
        if n == 0 {
            return Err(BraidError::ZeroArcs);
        }
        let ok = match self {
            NamedElement::Sigma(i) => (1..=2 * n + 1).contains(&i),
            NamedElement::ArcS(i) | NamedElement::ArcR(i) => (1..=n).contains(&i),
            NamedElement::ArcTwist(j) => (1..=n + 1).contains(&j),
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(BraidError::NamedOutOfRange { element: self, n })
        }
    }

    /// Expansion into half-twist letters on `2n+2` strands.
    pub fn word(self, n: usize) -> Result<BraidWord, BraidError> {
        self.validate(n)?;
        let m = 2 * n + 2;
        let w = |s: &[i32]| BraidWord::from_signed(m, s);
        match self {
            NamedElement::Sigma(i) => w(&[i as i32]),
            NamedElement::ArcS(i) => {
                let i = i as i32;
                w(&[2 * i, 2 * i + 1, 2 * i - 1, 2 * i])
            }
            NamedElement::ArcR(i) => {
                let i = i as i32;
                w(&[-2 * i, -(2 * i + 1), 2 * i - 1, 2 * i])
            }
            NamedElement::ArcTwist(j) => {
                let a = 2 * j as i32 - 1;
                w(&[a, a])
            }
            NamedElement::HalfTwistAll => BraidWord::new(
                m,
                (1..=n + 1).map(|j| BraidLetter::sigma(2 * j - 1)).collect(),
            ),
            NamedElement::CycleArcs => {
                let mut out = BraidWord::empty(m);
                for i in (1..=n).rev() {
                    out = out.concat(&NamedElement::ArcS(i).word(n)?)?;
                }
                Ok(out)
            }
            NamedElement::FullTwist => BraidWord::full_twist(m),
        }
    }
}

impl fmt::Display for NamedElement {
    /// Token spelling used by the command-line grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedElement::Sigma(i) => write!(f, "s{}", i),
            NamedElement::ArcS(i) => write!(f, "SS{}", i),
            NamedElement::ArcR(i) => write!(f, "RR{}", i),
            NamedElement::ArcTwist(j) => write!(f, "T{}", j),
            NamedElement::HalfTwistAll => f.write_str("R"),
            NamedElement::CycleArcs => f.write_str("S"),
            NamedElement::FullTwist => f.write_str("FT"),
        }
    }
}

/// The automorphism of `F_{m-1}` induced by a single half-twist.
///
/// `σ_i: x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i`. For `i = m-1` the loop
/// `x_m = (x_1 ⋯ x_{m-1})^{-1}` is substituted, giving
/// `x_{m-1} ↦ x_{m-1} (x_1 ⋯ x_{m-1})^{-1} x_{m-1}^{-1}`.
pub fn elementary(strands: usize, letter: BraidLetter) -> Result<FreeAut, BraidError> {
    if letter.index == 0 || letter.index >= strands {
        return Err(BraidError::IndexOutOfRange {
            index: letter.index,
            strands,
        });
    }
    let rank = strands - 1;
    let mut ext = PunctureImages::identity(strands);
    ext.right_multiply(letter);
    Ok(ext.into_aut(rank))
}

/// Images of all `m` puncture loops, including the dependent last one.
struct PunctureImages {
    images: Vec<FreeWord>,
}

impl PunctureImages {
    fn identity(strands: usize) -> Self {
        let rank = strands - 1;
        let mut images: Vec<FreeWord> = (1..=rank)
            .map(|g| FreeWord::free_reduce(rank, [Letter::gen(g)]).unwrap())
            .collect();
        let prod = images
            .iter()
            .fold(FreeWord::identity(rank), |acc, w| acc.mul(w));
        images.push(prod.inverse());
        PunctureImages { images }
    }

    /// Replace `F` by `F ∘ σ_i^{±1}`.
    fn right_multiply(&mut self, l: BraidLetter) {
        let (i, j) = (l.index - 1, l.index);
        let (a, b) = (self.images[i].clone(), self.images[j].clone());
        if l.inverse {
            // σ^{-1}: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            self.images[i] = b.clone();
            self.images[j] = a.conjugate_by(&b.inverse());
        } else {
            self.images[i] = b.conjugate_by(&a);
            self.images[j] = a;
        }
    }

    fn into_aut(mut self, rank: usize) -> FreeAut {
        self.images.truncate(rank);
        FreeAut::from_images(rank, self.images).expect("rank is consistent")
    }
}

/// Evaluate a braid word as an automorphism of `π_1` of the marked sphere,
/// under the global order convention.
pub fn gamma(b: &BraidWord) -> FreeAut {
    gamma_with(b, CONVENTION)
}

pub fn gamma_with(b: &BraidWord, order: ActionOrder) -> FreeAut {
    let mut ext = PunctureImages::identity(b.strands);
    let mut apply = |l: &BraidLetter| ext.right_multiply(*l);
    match order {
        ActionOrder::RightmostFirst => b.letters.iter().for_each(&mut apply),
        ActionOrder::LeftmostFirst => b.letters.iter().rev().for_each(&mut apply),
    }
    ext.into_aut(b.strands - 1)
}

/// Evaluation by explicit composition of elementary automorphisms. Slower than
/// [`gamma`]; kept as an independent route for cross-checking.
pub fn gamma_by_composition(b: &BraidWord) -> FreeAut {
    let mut acc = FreeAut::identity(b.strands - 1);
    for &l in &b.letters {
        let e = elementary(b.strands, l).expect("letters are validated");
        acc = match CONVENTION {
            ActionOrder::RightmostFirst => acc.compose(&e),
            ActionOrder::LeftmostFirst => e.compose(&acc),
        }
        .expect("ranks agree");
    }
    acc
}

/// Equality of two braid words as mapping classes of the marked sphere.
pub fn mapping_class_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch(a.strands, b.strands));
    }
    Ok(gamma(a)
        .out_equal(&gamma(b))
        .expect("images of braids are puncture-shaped"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(rank: usize, s: &[i32]) -> FreeWord {
        FreeWord::from_signed(rank, s).unwrap()
    }

    #[test]
    fn named_words_expand() {
        assert_eq!(
            NamedElement::ArcS(1).word(1).unwrap().to_string(),
            "s2 s3 s1 s2"
        );
        assert_eq!(
            NamedElement::ArcR(1).word(1).unwrap().to_string(),
            "s2' s3' s1 s2"
        );
        assert_eq!(
            NamedElement::ArcTwist(1).word(3).unwrap().to_string(),
            "s1 s1"
        );
        assert_eq!(
            NamedElement::HalfTwistAll.word(2).unwrap().to_string(),
            "s1 s3 s5"
        );
        assert_eq!(
            NamedElement::CycleArcs.word(2).unwrap().to_string(),
            "s4 s5 s3 s4 s2 s3 s1 s2"
        );
        assert_eq!(NamedElement::FullTwist.word(1).unwrap().len(), 12);
    }

    #[test]
    fn named_range_errors() {
        assert!(NamedElement::ArcS(2).word(1).is_err());
        assert!(NamedElement::ArcTwist(3).word(1).is_err());
        assert!(NamedElement::Sigma(4).word(1).is_err());
        assert!(NamedElement::Sigma(0).word(1).is_err());
        assert_eq!(NamedElement::CycleArcs.word(0), Err(BraidError::ZeroArcs));
    }

    #[test]
    fn sigma1_images() {
        let g = gamma(&BraidWord::from_signed(4, &[1]).unwrap());
        assert_eq!(g.images(), &[fw(3, &[1, 2, -1]), fw(3, &[1]), fw(3, &[3])]);
    }

    #[test]
    fn last_generator_uses_sphere_relation() {
        let g = gamma(&BraidWord::from_signed(4, &[3]).unwrap());
        // x3 ↦ x3 (x1 x2 x3)^{-1} x3^{-1} = x3 x3' x2' x1' x3' = x2' x1' x3'
        assert_eq!(
            g.images(),
            &[fw(3, &[1]), fw(3, &[2]), fw(3, &[-2, -1, -3])]
        );
    }

    #[test]
    fn sigma1_sigma2_on_x1() {
        // Rightmost first: σ1(σ2(x1)) = σ1(x1) = x1 x2 x1'.
        let g = gamma(&BraidWord::from_signed(4, &[1, 2]).unwrap());
        assert_eq!(g.apply(&fw(3, &[1])).unwrap(), fw(3, &[1, 2, -1]));
        // and x2: σ1(σ2(x2)) = σ1(x2 x3 x2') = x1 x3 x1'
        assert_eq!(g.apply(&fw(3, &[2])).unwrap(), fw(3, &[1, 3, -1]));
    }

    #[test]
    fn syntactic_cancel_examples() {
        let w = |s: &[i32]| BraidWord::from_signed(4, s).unwrap();
        assert!(w(&[1, -1]).syntactic_cancel().is_empty());
        assert_eq!(w(&[1, 2]).syntactic_cancel(), w(&[1, 2]));
        assert_eq!(w(&[-2, 2, 1]).syntactic_cancel(), w(&[1]));
    }

    #[test]
    fn perm_examples() {
        let p = BraidWord::from_signed(4, &[1]).unwrap().perm();
        assert_eq!(p.to_string(), "(1 2)");
        assert_eq!(
            NamedElement::ArcS(1).word(1).unwrap().perm().to_string(),
            "(1 3)(2 4)"
        );
        assert_eq!(
            NamedElement::HalfTwistAll
                .word(1)
                .unwrap()
                .perm()
                .to_string(),
            "(1 2)(3 4)"
        );
    }

    #[test]
    fn full_twist_is_trivial() {
        for m in [3, 4, 5, 6] {
            let ft = BraidWord::full_twist(m).unwrap();
            assert!(gamma(&ft).common_conjugator().unwrap().is_some(), "m = {m}");
        }
    }

    #[test]
    fn rejects_bad_index() {
        assert!(BraidWord::from_signed(4, &[4]).is_err());
        assert!(BraidWord::from_signed(1, &[]).is_err());
    }
}
