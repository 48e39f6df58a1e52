//! Free groups of finite rank and their automorphisms.
//!
//! The fundamental group of the sphere minus `m` marked points is free on
//! `x_1, ..., x_{m-1}`, with the loop around the last point given by
//! `x_m = (x_1 ... x_{m-1})^{-1}`. Mapping classes act on it by automorphisms
//! that are well defined up to an inner automorphism, so equality of mapping
//! classes is decided here by solving for a common conjugator.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("image of x{index} is not conjugate to a single generator")]
    NotPunctureShaped { index: usize },
    #[error("images do not induce a permutation of the punctures")]
    NotPermutation,
    #[error("automorphism needs {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
}

/// A generator or inverse generator. Generators are numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator >= 1, "generators are numbered from 1");
        let g = generator as i32;
        Letter(if inverse { -g } else { g })
    }

    pub fn gen(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn generator(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Ordering key for canonical tie-breaks: by index, then positive before inverse.
    fn sort_key(self) -> (usize, bool) {
        (self.generator(), self.is_inverse())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "x{}'", self.generator())
        } else {
            write!(f, "x{}", self.generator())
        }
    }
}

/// Push `l` onto a reduced word, cancelling against the last letter.
#[inline]
fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

/// A freely reduced word in the free group of the given rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The word `x_g`.
    pub fn generator(rank: usize, g: usize) -> Result<Self, FreeGroupError> {
        Self::free_reduce(rank, [Letter::gen(g)])
    }

    /// Freely reduce a raw letter sequence.
    pub fn free_reduce<I>(rank: usize, letters: I) -> Result<Self, FreeGroupError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut buf = Vec::new();
        for l in letters {
            if l.generator() > rank {
                return Err(FreeGroupError::IndexOutOfRange {
                    index: l.generator(),
                    rank,
                });
            }
            push_reduced(&mut buf, l);
        }
        Ok(FreeWord { rank, letters: buf })
    }

    /// Build from signed integers: `3` is `x_3`, `-3` is `x_3^{-1}`.
    pub fn from_signed(rank: usize, letters: &[i32]) -> Result<Self, FreeGroupError> {
        Self::free_reduce(
            rank,
            letters.iter().map(|&s| {
                assert!(s != 0, "zero is not a letter");
                Letter::new(s.unsigned_abs() as usize, s < 0)
            }),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Product `self * other`; both factors are reduced so only the seam cancels.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut buf = Vec::with_capacity(self.len() + other.len());
        buf.extend_from_slice(&self.letters);
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        FreeWord {
            rank: self.rank,
            letters: buf,
        }
    }

    /// `c * self * c^{-1}`.
    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        c.mul(self).mul(&c.inverse())
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Split into `(core, conjugator)` with `self = conjugator * core * conjugator^{-1}`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let w = &self.letters;
        let mut k = 0;
        while w.len() >= 2 * (k + 1) && w[k] == w[w.len() - 1 - k].inverse() {
            k += 1;
        }
        let core = FreeWord {
            rank: self.rank,
            letters: w[k..w.len() - k].to_vec(),
        };
        let conj = FreeWord {
            rank: self.rank,
            letters: w[..k].to_vec(),
        };
        (core, conj)
    }

    /// If the word is a conjugate `c x_g c^{-1}` of a single positive generator,
    /// return `(g, c)` with `c` the canonical (shortest) conjugator.
    pub fn as_puncture_loop(&self) -> Option<(usize, FreeWord)> {
        let (core, conj) = self.cyclic_reduce();
        match core.letters.as_slice() {
            [l] if !l.is_inverse() => Some((l.generator(), conj)),
            _ => None,
        }
    }

    /// Length of the leading run of `l^{±1}` letters, signed.
    fn leading_power_of(&self, g: usize) -> i64 {
        let mut e = 0i64;
        for l in &self.letters {
            if l.generator() != g {
                break;
            }
            e += if l.is_inverse() { -1 } else { 1 };
        }
        e
    }

    /// Shortlex order on `(index, sign)`; used to pick canonical representatives.
    pub fn cmp_shortlex(&self, other: &FreeWord) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            self.letters
                .iter()
                .map(|l| l.sort_key())
                .cmp(other.letters.iter().map(|l| l.sort_key()))
        })
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord[{}]", self)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// An automorphism of the free group, stored as the images of `x_1, ..., x_rank`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeAut {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeAut {
    pub fn identity(rank: usize) -> Self {
        FreeAut {
            rank,
            images: (1..=rank)
                .map(|g| FreeWord {
                    rank,
                    letters: vec![Letter::gen(g)],
                })
                .collect(),
        }
    }

    pub fn from_images(rank: usize, images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        if images.len() != rank {
            return Err(FreeGroupError::WrongImageCount {
                expected: rank,
                got: images.len(),
            });
        }
        for w in &images {
            if w.rank != rank {
                return Err(FreeGroupError::RankMismatch {
                    left: rank,
                    right: w.rank,
                });
            }
        }
        Ok(FreeAut { rank, images })
    }

    /// The inner automorphism `v -> w v w^{-1}`.
    pub fn inner(w: &FreeWord) -> Self {
        let id = FreeAut::identity(w.rank);
        id.then_inner(w)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_i` for `i` in `1..=rank+1`, where `x_{rank+1}` is the
    /// inverse of the product of all generators.
    pub fn image_of_puncture(&self, i: usize) -> FreeWord {
        if i <= self.rank {
            self.images[i - 1].clone()
        } else {
            let mut prod = FreeWord::identity(self.rank);
            for w in &self.images {
                prod = prod.mul(w);
            }
            prod.inverse()
        }
    }

    /// Substitute the images into `w` and reduce.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        if w.rank != self.rank {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank,
                right: w.rank,
            });
        }
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: &FreeWord) -> FreeWord {
        let mut buf = Vec::new();
        for &l in &w.letters {
            let img = &self.images[l.generator() - 1].letters;
            if l.is_inverse() {
                for &x in img.iter().rev() {
                    push_reduced(&mut buf, x.inverse());
                }
            } else {
                for &x in img {
                    push_reduced(&mut buf, x);
                }
            }
        }
        FreeWord {
            rank: self.rank,
            letters: buf,
        }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &FreeAut) -> Result<FreeAut, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(FreeAut {
            rank: self.rank,
            images: other
                .images
                .iter()
                .map(|w| self.apply_unchecked(w))
                .collect(),
        })
    }

    /// `inn_w ∘ self`.
    pub fn then_inner(&self, w: &FreeWord) -> FreeAut {
        FreeAut {
            rank: self.rank,
            images: self.images.iter().map(|v| v.conjugate_by(w)).collect(),
        }
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// For each puncture `i`, the generator whose loop `x_i` is carried to, plus
    /// the canonical conjugator. Errors when the automorphism does not permute
    /// the puncture loops.
    fn puncture_data(&self) -> Result<Vec<(usize, FreeWord)>, FreeGroupError> {
        let m = self.rank + 1;
        let mut out = Vec::with_capacity(m);
        let mut seen = vec![false; m + 1];
        for i in 1..=m {
            let img = self.image_of_puncture(i);
            let (g, c) = puncture_class(&img, self.rank)
                .ok_or(FreeGroupError::NotPunctureShaped { index: i })?;
            if seen[g] {
                return Err(FreeGroupError::NotPermutation);
            }
            seen[g] = true;
            out.push((g, c));
        }
        Ok(out)
    }

    /// The permutation of punctures: entry `i-1` is the image of puncture `i` (1-based).
    pub fn puncture_perm(&self) -> Result<Vec<usize>, FreeGroupError> {
        Ok(self.puncture_data()?.into_iter().map(|(g, _)| g).collect())
    }

    pub fn is_puncture_shaped(&self) -> bool {
        self.puncture_data().is_ok()
    }

    /// A word `w` with `self(x_i) = w x_i w^{-1}` for every puncture loop, if any.
    pub fn common_conjugator(&self) -> Result<Option<FreeWord>, FreeGroupError> {
        relative_conjugator(self, &FreeAut::identity(self.rank))
    }

    /// Equality in `Out(F)`: whether `self = inn_w ∘ other` for some `w`.
    pub fn out_equal(&self, other: &FreeAut) -> Result<bool, FreeGroupError> {
        Ok(relative_conjugator(self, other)?.is_some())
    }
}

/// Classify a word as a conjugate of one puncture loop `x_1..x_{rank+1}`.
///
/// Loops around the last puncture are conjugates of `(x_1 ... x_rank)^{-1}`;
/// they are recognised by cyclically reducing and comparing against every
/// cyclic rotation of that word.
fn puncture_class(w: &FreeWord, rank: usize) -> Option<(usize, FreeWord)> {
    if let Some(found) = w.as_puncture_loop() {
        return Some(found);
    }
    let (core, conj) = w.cyclic_reduce();
    if core.len() != rank {
        return None;
    }
    // Cyclic rotations of x_rank^{-1} ... x_1^{-1}.
    let last: Vec<Letter> = (1..=rank).rev().map(|g| Letter::new(g, true)).collect();
    for shift in 0..rank {
        let rotated: Vec<Letter> = last[shift..]
            .iter()
            .chain(&last[..shift])
            .copied()
            .collect();
        if rotated == core.letters {
            // core = u^{-1} L u where L = last, u = last[..shift]
            let u = FreeWord {
                rank,
                letters: last[..shift].to_vec(),
            };
            let c = conj.mul(&u.inverse());
            return Some((rank + 1, c));
        }
    }
    None
}

/// Solve `phi(x_i) = w psi(x_i) w^{-1}` for all punctures `i`.
///
/// A reference puncture whose image loop `y` is a single generator pins `w`
/// to the coset `a <y> b^{-1}`; a second such puncture fixes the exponent,
/// and every puncture is then checked by substitution. For rank at least 2
/// the solution is unique when it exists. In rank 1 the group is abelian and
/// the only question is whether the images agree.
pub fn relative_conjugator(
    phi: &FreeAut,
    psi: &FreeAut,
) -> Result<Option<FreeWord>, FreeGroupError> {
    if phi.rank != psi.rank {
        return Err(FreeGroupError::RankMismatch {
            left: phi.rank,
            right: psi.rank,
        });
    }
    let rank = phi.rank;
    let pd = phi.puncture_data()?;
    let qd = psi.puncture_data()?;
    if pd.iter().zip(&qd).any(|(p, q)| p.0 != q.0) {
        return Ok(None);
    }
    if rank == 1 {
        return Ok((phi.images == psi.images).then(|| FreeWord::identity(1)));
    }

    // At most one puncture lands on the last loop, so two references exist.
    let mut refs = (1..=rank + 1).filter(|&i| pd[i - 1].0 <= rank);
    let (i0, i1) = (refs.next().unwrap(), refs.next().unwrap());
    let y = pd[i0 - 1].0;
    let (a, b) = (&pd[i0 - 1].1, &qd[i0 - 1].1);

    // With P = b^{-1} psi(x_i1) b and Q = a^{-1} phi(x_i1) a we need
    // y^t P y^{-t} = Q. Canonical conjugators of P and Q differ exactly by the
    // leading y-run.
    let p = psi.image_of_puncture(i1).conjugate_by(&b.inverse());
    let q = phi.image_of_puncture(i1).conjugate_by(&a.inverse());
    let (Some((_, c)), Some((_, d))) = (p.as_puncture_loop(), q.as_puncture_loop()) else {
        return Ok(None);
    };
    let t = d.leading_power_of(y) - c.leading_power_of(y);
    let w = a
        .mul(&FreeWord::generator(rank, y)?.pow(t))
        .mul(&b.inverse());
    Ok(check_conjugator(phi, psi, &w).then_some(w))
}

fn check_conjugator(phi: &FreeAut, psi: &FreeAut, w: &FreeWord) -> bool {
    (1..=phi.rank + 1).all(|i| psi.image_of_puncture(i).conjugate_by(w) == phi.image_of_puncture(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &[i32]) -> FreeWord {
        FreeWord::from_signed(rank, s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(3, &[1, 2, -2]), w(3, &[1]));
        assert!(w(3, &[]).is_empty());
        assert_eq!(w(3, &[-1, 1, 1]), w(3, &[1]));
        assert_eq!(w(3, &[1, 2, -2, -1]).len(), 0);
    }

    #[test]
    fn free_reduce_rejects_out_of_range() {
        let err = FreeWord::from_signed(2, &[1, 3]).unwrap_err();
        assert_eq!(err, FreeGroupError::IndexOutOfRange { index: 3, rank: 2 });
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, c) = w(3, &[1, 2, -1]).cyclic_reduce();
        assert_eq!(core, w(3, &[2]));
        assert_eq!(c, w(3, &[1]));
        let (core, c) = w(3, &[2]).cyclic_reduce();
        assert_eq!(core, w(3, &[2]));
        assert!(c.is_empty());
        let (core, c) = w(3, &[]).cyclic_reduce();
        assert!(core.is_empty() && c.is_empty());
    }

    #[test]
    fn last_puncture_loop_is_recognised() {
        // x_4 = (x1 x2 x3)^{-1} in rank 3, conjugated by x2.
        let last = w(3, &[-3, -2, -1]);
        let (g, c) = puncture_class(&last, 3).unwrap();
        assert_eq!((g, c.len()), (4, 0));
        let conj = last.conjugate_by(&w(3, &[2]));
        let (g, c) = puncture_class(&conj, 3).unwrap();
        assert_eq!(g, 4);
        assert_eq!(last.conjugate_by(&c), conj);
    }

    #[test]
    fn identity_has_empty_conjugator() {
        let id = FreeAut::identity(3);
        assert_eq!(id.common_conjugator().unwrap(), Some(FreeWord::identity(3)));
    }

    #[test]
    fn conjugation_by_x1_is_detected() {
        let inn = FreeAut::inner(&w(3, &[1]));
        assert_eq!(inn.common_conjugator().unwrap(), Some(w(3, &[1])));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = FreeAut::identity(2);
        let b = FreeAut::identity(3);
        assert!(matches!(
            a.compose(&b),
            Err(FreeGroupError::RankMismatch { .. })
        ));
        assert!(a.out_equal(&b).is_err());
        assert!(a.apply(&w(3, &[1])).is_err());
    }

    #[test]
    fn non_mapping_class_is_rejected() {
        // x1 -> x1 x2 is an automorphism but does not permute puncture loops.
        let phi = FreeAut::from_images(2, vec![w(2, &[1, 2]), w(2, &[2])]).unwrap();
        assert!(matches!(
            phi.puncture_perm(),
            Err(FreeGroupError::NotPunctureShaped { index: 1 })
        ));
    }

    #[test]
    fn rank_one_is_abelian() {
        let id = FreeAut::identity(1);
        let inn = FreeAut::inner(&w(1, &[1, 1]));
        assert!(id.out_equal(&inn).unwrap());
    }
}
