//! Exact monomial-ideal arithmetic over exponent vectors.
//!
//! A [`MonomialIdeal`] is always stored by its minimal generating set, sorted
//! lexicographically by exponent vector, so two ideals are equal exactly when
//! their generator lists are. Monomial ideals need no Gröbner machinery:
//! membership is divisibility by a generator, intersections are generated by
//! pairwise lcms and products by pairwise products.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::vertex_set::VertexSet;
use crate::{GuardExceeded, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("powers must have exponent at least 1")]
    ZeroPower,
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}

fn same_dim(left: usize, right: usize) -> Result<(), IdealError> {
    if left != right {
        return Err(IdealError::DimensionMismatch { left, right });
    }
    Ok(())
}

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The unit monomial in `dim` variables.
    pub fn one(dim: usize) -> Self {
        Monomial(alloc::vec![0; dim])
    }

    /// `x_i` in `dim` variables.
    pub fn var(i: usize, dim: usize) -> Self {
        Self::var_pow(i, 1, dim)
    }

    /// `x_i^e` in `dim` variables.
    pub fn var_pow(i: usize, e: u32, dim: usize) -> Self {
        let mut m = Self::one(dim);
        m.0[i] = e;
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool, IdealError> {
        same_dim(self.dim(), other.dim())?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Product. Panics if an exponent overflows `u32`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow in monomial product"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }

    /// Sets the exponents of all variables outside `keep` to zero.
    pub fn restrict(&self, keep: VertexSet) -> Monomial {
        Monomial(
            self.0.iter().enumerate().map(|(i, &e)| if keep.contains(i) { e } else { 0 }).collect(),
        )
    }

    /// Display with custom variable names, e.g. `x1*x2^3`.
    pub fn display_with<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> impl fmt::Display + 'a {
        DisplayMonomial { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Uses the names `x1, x2, ...`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.0, |f, i| write!(f, "x{}", i + 1))
    }
}

struct DisplayMonomial<'a, S> {
    mono: &'a Monomial,
    names: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for DisplayMonomial<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.mono.0, |f, i| f.write_str(self.names[i].as_ref()))
    }
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    exps: &[u32],
    name: impl Fn(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        name(f, i)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// A monomial ideal held by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

struct Keyed {
    mask: u64,
    mono: Monomial,
}

impl MonomialIdeal {
    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal { dim, gens: alloc::vec![Monomial::one(dim)] }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self, IdealError> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            same_dim(dim, g.dim())?;
        }
        Ok(Self::minimalize_unchecked(dim, gens))
    }

    /// Minimal generators of `(gens)`. Candidates are scanned by increasing
    /// degree, so a candidate can only be divided by one already kept.
    pub(crate) fn minimalize_unchecked(dim: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<Keyed> = Vec::new();
        for mono in gens {
            let mask = mono.support().bits();
            let divided = kept
                .iter()
                .any(|k| k.mask & !mask == 0 && k.mono.divides_unchecked(&mono));
            if !divided {
                kept.push(Keyed { mask, mono });
            }
        }
        let mut gens: Vec<Monomial> = kept.into_iter().map(|k| k.mono).collect();
        gens.sort_unstable();
        let ideal = MonomialIdeal { dim, gens };
        #[cfg(debug_assertions)]
        if ideal.gens.len() <= 256 {
            debug_assert!(ideal.is_antichain(), "minimalize produced a non-antichain");
        }
        ideal
    }

    fn is_antichain(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens.iter().enumerate().all(|(j, b)| i == j || !a.divides_unchecked(b))
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Minimal generators, sorted lexicographically.
    #[inline]
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators. No generators means the zero ideal, see
    /// [`MonomialIdeal::is_zero`].
    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Whether some generator divides `m`.
    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool, IdealError> {
        same_dim(self.dim, m.dim())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool, IdealError> {
        same_dim(self.dim, other.dim)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Canonical equality, checked for matching dimensions.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool, IdealError> {
        same_dim(self.dim, other.dim)?;
        Ok(self.gens == other.gens)
    }

    /// `self + other`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self, IdealError> {
        same_dim(self.dim, other.dim)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::minimalize_unchecked(self.dim, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self, IdealError> {
        self.intersect_within(other, &Limits::UNBOUNDED)
    }

    /// Intersection via pairwise lcms, refusing grids larger than
    /// `limits.max_generators`.
    pub fn intersect_within(&self, other: &MonomialIdeal, limits: &Limits) -> Result<Self, IdealError> {
        same_dim(self.dim, other.dim)?;
        limits.check_generators(self.gens.len().saturating_mul(other.gens.len()))?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.lcm(g));
            }
        }
        Ok(Self::minimalize_unchecked(self.dim, gens))
    }

    /// Intersection of several ideals, folded smallest-first. `None` if
    /// `ideals` is empty.
    pub fn intersect_all(ideals: &[MonomialIdeal], limits: &Limits) -> Result<Option<Self>, IdealError> {
        let mut order: Vec<&MonomialIdeal> = ideals.iter().collect();
        order.sort_by_key(|i| i.len());
        let mut iter = order.into_iter();
        let Some(first) = iter.next() else { return Ok(None) };
        let mut acc = first.clone();
        for next in iter {
            acc = acc.intersect_within(next, limits)?;
        }
        Ok(Some(acc))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self, IdealError> {
        self.product_within(other, &Limits::UNBOUNDED)
    }

    pub fn product_within(&self, other: &MonomialIdeal, limits: &Limits) -> Result<Self, IdealError> {
        same_dim(self.dim, other.dim)?;
        limits.check_generators(self.gens.len().saturating_mul(other.gens.len()))?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g));
            }
        }
        Ok(Self::minimalize_unchecked(self.dim, gens))
    }

    pub fn power(&self, s: u32) -> Result<Self, IdealError> {
        self.power_within(s, &Limits::UNBOUNDED)
    }

    /// `self^s` by repeated multiplication with minimalization at each step.
    pub fn power_within(&self, s: u32, limits: &Limits) -> Result<Self, IdealError> {
        if s == 0 {
            return Err(IdealError::ZeroPower);
        }
        limits.check_power(s)?;
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product_within(self, limits)?;
        }
        Ok(acc)
    }

    /// Localization at the prime generated by `keep`, contracted back: every
    /// variable outside `keep` is set to 1.
    pub fn restrict(&self, keep: VertexSet) -> Self {
        let gens = self.gens.iter().map(|g| g.restrict(keep)).collect();
        Self::minimalize_unchecked(self.dim, gens)
    }

    /// Whether `m ∈ self^s`, without expanding the power.
    ///
    /// Depth-first search over multisets of `s` generators (non-decreasing
    /// generator index, heaviest generators first) that divide `m`; failed
    /// `(quotient, remaining, start)` states are memoized and branches whose
    /// remaining degree cannot host the required generators are cut.
    pub fn member_of_power(&self, m: &Monomial, s: u32) -> Result<bool, IdealError> {
        same_dim(self.dim, m.dim())?;
        if s == 0 {
            return Err(IdealError::ZeroPower);
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let mut gens: Vec<&Monomial> = self.gens.iter().filter(|g| g.divides_unchecked(m)).collect();
        gens.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        let min_degree = self.gens.iter().map(Monomial::degree).min().unwrap_or(0);
        let mut search = PowerSearch { gens, min_degree, failed: BTreeSet::new() };
        Ok(search.run(m.clone(), s, 0))
    }
}

struct PowerSearch<'a> {
    gens: Vec<&'a Monomial>,
    min_degree: u64,
    failed: BTreeSet<(Monomial, u32, usize)>,
}

impl PowerSearch<'_> {
    fn run(&mut self, rest: Monomial, remaining: u32, start: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        if rest.degree() < u64::from(remaining) * self.min_degree {
            return false;
        }
        let key = (rest, remaining, start);
        if self.failed.contains(&key) {
            return false;
        }
        let (rest, _, _) = &key;
        for i in start..self.gens.len() {
            if let Some(q) = rest.quotient(self.gens[i]) {
                if self.run(q, remaining - 1, i) {
                    return true;
                }
            }
        }
        self.failed.insert(key);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(dim, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn divisibility() {
        assert_eq!(m(&[0, 3]).divides(&m(&[1, 3])), Ok(true));
        assert_eq!(m(&[1, 1]).divides(&m(&[0, 3])), Ok(false));
        assert_eq!(Monomial::one(2).divides(&m(&[4, 0])), Ok(true));
        assert!(m(&[1]).divides(&m(&[1, 0])).is_err());
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal(2, &[&[1, 3], &[1, 4]]);
        assert_eq!(i.generators(), [m(&[1, 3])]);
        assert!(ideal(2, &[]).is_zero());
        let four = ideal(5, &[&[1, 3, 0, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 3, 1]]);
        assert_eq!(four.len(), 4);
    }

    #[test]
    fn intersection_examples() {
        let x = ideal(3, &[&[1, 0, 0]]);
        let y2 = ideal(3, &[&[0, 2, 0]]);
        assert_eq!(x.intersect(&y2).unwrap().generators(), [m(&[1, 2, 0])]);
        let xy = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let xz = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(xy.intersect(&xz).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 1, 1]]));
    }

    #[test]
    fn powers() {
        let xy = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(xy.power(2).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(xy.power(1).unwrap(), xy);
        assert_eq!(xy.power(0), Err(IdealError::ZeroPower));
        let lim = Limits { max_power: 2, ..Limits::default() };
        assert!(matches!(xy.power_within(3, &lim), Err(IdealError::Guard(_))));
    }

    #[test]
    fn membership() {
        let unit = MonomialIdeal::unit(2);
        let zero = MonomialIdeal::zero(2);
        assert!(unit.contains_monomial(&m(&[3, 1])).unwrap());
        assert!(!zero.contains_monomial(&Monomial::one(2)).unwrap());
        assert!(unit.is_unit());
    }

    #[test]
    fn member_of_power_basic() {
        let j = ideal(3, &[&[1, 2, 0], &[0, 1, 1]]);
        let g1g2 = m(&[1, 3, 1]);
        assert_eq!(j.member_of_power(&g1g2, 2), Ok(true));
        assert_eq!(j.member_of_power(&m(&[1, 2, 0]), 2), Ok(false));
        assert_eq!(j.member_of_power(&m(&[2, 4, 0]), 2), Ok(true));
        assert_eq!(MonomialIdeal::zero(3).member_of_power(&g1g2, 1), Ok(false));
    }

    #[test]
    fn restrict_examples() {
        let xy2 = ideal(2, &[&[1, 2]]);
        assert_eq!(xy2.restrict(VertexSet::singleton(1)), ideal(2, &[&[0, 2]]));
        assert_eq!(xy2.restrict(VertexSet::full(2)), xy2);
        let i = ideal(5, &[&[1, 3, 0, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 3, 1]]);
        let keep: VertexSet = [1, 3].into_iter().collect();
        assert_eq!(i.restrict(keep), ideal(5, &[&[0, 1, 0, 0, 0], &[0, 0, 0, 1, 0]]));
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", m(&[1, 3, 0])), "x1*x2^3");
        assert_eq!(format!("{}", Monomial::one(2)), "1");
        let names = ["a", "b"];
        assert_eq!(format!("{}", m(&[2, 1]).display_with(&names)), "a^2*b");
        assert_eq!(format!("{:?}", ideal(2, &[&[1, 0], &[0, 2]])), "(x2^2, x1)");
    }

    #[test]
    fn equals_checks_dimension() {
        let a = ideal(1, &[&[1]]);
        assert_eq!(a.equals(&a), Ok(true));
        assert_eq!(a.equals(&ideal(1, &[&[2]])), Ok(false));
        assert!(a.equals(&MonomialIdeal::zero(2)).is_err());
        let _ = vec![0u8];
    }
}
