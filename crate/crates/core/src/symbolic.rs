//! Edge ideals, their irreducible decomposition, the localized components
//! `I_{⊆C}` and symbolic powers.
//!
//! Symbolic powers are computed two ways. The main route intersects
//! `(I_{⊆C})^s` over the maximal strong covers `C`, with `I_{⊆C}` given by a
//! closed generator formula. The oracle localizes `I^s` directly at each
//! maximal associated prime. Localizing at a smaller support yields a smaller
//! ideal (restriction to `C' ⊆ C` divides restriction to `C`), so the maximal
//! primes already determine the intersection.

use alloc::vec::Vec;
use core::time::Duration;

use crate::covers::{self, CoverError, CoverPartition};
use crate::digraph::WeightedOrientedGraph;
use crate::ideals::{IdealError, Monomial, MonomialIdeal};
use crate::vertex_set::VertexSet;
use crate::{GuardExceeded, Limits};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolicError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("power comparison needs s >= 2, got {0}")]
    PowerTooSmall(u32),
    /// An internal identity failed to hold. This is a bug, never an input
    /// problem.
    #[error("internal check failed: {0}")]
    InvariantBroken(&'static str),
}

impl From<GuardExceeded> for SymbolicError {
    fn from(e: GuardExceeded) -> Self {
        SymbolicError::Ideal(IdealError::Guard(e))
    }
}

impl SymbolicError {
    /// The exceeded bound, if this error is a guard refusal.
    pub fn guard(&self) -> Option<&GuardExceeded> {
        match self {
            SymbolicError::Ideal(IdealError::Guard(g)) | SymbolicError::Cover(CoverError::Guard(g)) => Some(g),
            _ => None,
        }
    }
}

/// Outcome of comparing `I^(s)` with `I^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerComparison {
    pub s: u32,
    pub equal: bool,
    /// First minimal generator of `I^(s)` (canonical order) outside `I^s`.
    pub witness: Option<Monomial>,
    /// Minimal generators of `I^s`; `None` when expanding the power would
    /// exceed the generator guard.
    pub gen_count_ordinary: Option<usize>,
    pub gen_count_symbolic: usize,
    /// Left at zero by this crate, which has no clock.
    pub elapsed: Duration,
}

/// Which associated primes the localization oracle intersects over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleScope {
    #[default]
    Maximal,
    All,
}

/// `I(D) = (x_i x_j^{w_j} : (x_i, x_j) ∈ E(D))`.
pub fn edge_ideal(g: &WeightedOrientedGraph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g
        .edges()
        .iter()
        .map(|&(a, b)| Monomial::var(a, n).mul(&Monomial::var_pow(b, g.weight(b), n)))
        .collect();
    MonomialIdeal::minimalize_unchecked(n, gens)
}

/// `I_C`: L1 variables, and L2/L3 variables raised to their weights.
pub fn irreducible_ideal(g: &WeightedOrientedGraph, c: VertexSet) -> Result<MonomialIdeal, CoverError> {
    Ok(irreducible_of(g, &covers::partition(g, c)?))
}

/// [`irreducible_ideal`] from an already computed partition.
pub fn irreducible_of(g: &WeightedOrientedGraph, p: &CoverPartition) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = p
        .l1
        .iter()
        .map(|x| Monomial::var(x, n))
        .chain(p.l2.union(p.l3).iter().map(|x| Monomial::var_pow(x, g.weight(x), n)))
        .collect();
    MonomialIdeal::minimalize_unchecked(n, gens)
}

/// The irredundant irreducible decomposition: every strong cover with its
/// `I_C`. The intersection of the components is checked against `I(D)`.
pub fn decomposition(
    g: &WeightedOrientedGraph,
    limits: &Limits,
) -> Result<Vec<(CoverPartition, MonomialIdeal)>, SymbolicError> {
    let parts: Vec<(CoverPartition, MonomialIdeal)> = covers::strong_covers(g, limits)?
        .into_iter()
        .map(|p| {
            let ideal = irreducible_of(g, &p);
            (p, ideal)
        })
        .collect();
    let ideals: Vec<MonomialIdeal> = parts.iter().map(|(_, i)| i.clone()).collect();
    let meet = MonomialIdeal::intersect_all(&ideals, limits)?
        .ok_or(SymbolicError::InvariantBroken("a graph always has a strong cover"))?;
    if meet != edge_ideal(g) {
        return Err(SymbolicError::InvariantBroken("decomposition does not reproduce the edge ideal"));
    }
    Ok(parts)
}

/// Supports of the associated primes, i.e. the strong covers.
pub fn associated_primes(g: &WeightedOrientedGraph, limits: &Limits) -> Result<Vec<VertexSet>, GuardExceeded> {
    Ok(covers::strong_covers(g, limits)?.into_iter().map(|p| p.cover).collect())
}

/// `I_{⊆C}` from its closed form, for a maximal strong cover `c`:
///
/// `(L1) + (x^w : x ∈ L2) + (x_i x_j^{w_j} : (x_i, x_j) ∈ E, x_i ∈ L2 ∪ L3, x_j ∈ L3)`.
pub fn i_sub_c_formula(
    g: &WeightedOrientedGraph,
    c: VertexSet,
    limits: &Limits,
) -> Result<MonomialIdeal, SymbolicError> {
    let p = covers::partition(g, c)?;
    if !p.is_strong() {
        return Err(CoverError::NotMaximalStrong(c).into());
    }
    if !covers::maximal_strong_covers(g, limits)?.iter().any(|m| m.cover == c) {
        return Err(CoverError::NotMaximalStrong(c).into());
    }
    Ok(i_sub_c_formula_unchecked(g, &p))
}

/// [`i_sub_c_formula`] without the maximality check.
pub fn i_sub_c_formula_unchecked(g: &WeightedOrientedGraph, p: &CoverPartition) -> MonomialIdeal {
    let n = g.vertex_count();
    let inner = p.l2.union(p.l3);
    let mut gens: Vec<Monomial> = p.l1.iter().map(|x| Monomial::var(x, n)).collect();
    gens.extend(p.l2.iter().map(|x| Monomial::var_pow(x, g.weight(x), n)));
    gens.extend(
        g.edges()
            .iter()
            .filter(|&&(a, b)| inner.contains(a) && p.l3.contains(b))
            .map(|&(a, b)| Monomial::var(a, n).mul(&Monomial::var_pow(b, g.weight(b), n))),
    );
    MonomialIdeal::minimalize_unchecked(n, gens)
}

/// `I_{⊆C}` by definition: the intersection of `I_{C'}` over all strong
/// covers `C' ⊆ c`. `c` must be strong.
pub fn i_sub_c_bruteforce(
    g: &WeightedOrientedGraph,
    c: VertexSet,
    limits: &Limits,
) -> Result<MonomialIdeal, SymbolicError> {
    if !covers::partition(g, c)?.is_strong() {
        return Err(CoverError::NotStrong(c).into());
    }
    let inside: Vec<MonomialIdeal> = covers::strong_covers(g, limits)?
        .iter()
        .filter(|p| p.cover.is_subset(c))
        .map(|p| irreducible_of(g, p))
        .collect();
    MonomialIdeal::intersect_all(&inside, limits)?
        .ok_or(SymbolicError::InvariantBroken("a strong cover contains itself"))
}

/// `I^(s)` as the intersection of `(I_{⊆C})^s` over maximal strong covers.
pub fn symbolic_power(g: &WeightedOrientedGraph, s: u32, limits: &Limits) -> Result<MonomialIdeal, SymbolicError> {
    if s == 0 {
        return Err(IdealError::ZeroPower.into());
    }
    limits.check_power(s)?;
    let mut powers = Vec::new();
    for p in covers::maximal_strong_covers(g, limits)? {
        powers.push(i_sub_c_formula_unchecked(g, &p).power_within(s, limits)?);
    }
    MonomialIdeal::intersect_all(&powers, limits)?
        .ok_or(SymbolicError::InvariantBroken("a graph always has a strong cover"))
}

/// `I^(s)` as the intersection of `I^s` localized at the associated primes.
pub fn symbolic_power_oracle(
    g: &WeightedOrientedGraph,
    s: u32,
    scope: OracleScope,
    limits: &Limits,
) -> Result<MonomialIdeal, SymbolicError> {
    if s == 0 {
        return Err(IdealError::ZeroPower.into());
    }
    let ordinary = edge_ideal(g).power_within(s, limits)?;
    let primes = match scope {
        OracleScope::Maximal => covers::maximal_strong_covers(g, limits)?,
        OracleScope::All => covers::strong_covers(g, limits)?,
    };
    let local: Vec<MonomialIdeal> = primes.iter().map(|p| ordinary.restrict(p.cover)).collect();
    MonomialIdeal::intersect_all(&local, limits)?
        .ok_or(SymbolicError::InvariantBroken("a graph always has a strong cover"))
}

/// Decides `I^(s) = I^s` for `s ≥ 2`.
///
/// Equality holds iff every minimal generator of `I^(s)` lies in `I^s`, which
/// is tested with [`MonomialIdeal::member_of_power`] so `I^s` never has to be
/// expanded. When the expansion fits the guard it is still computed, to report
/// its size and to confirm `I^s ⊆ I^(s)`.
pub fn compare_powers(g: &WeightedOrientedGraph, s: u32, limits: &Limits) -> Result<PowerComparison, SymbolicError> {
    compare(g, s, limits, false)
}

/// [`compare_powers`], additionally comparing the expanded `I^s` with `I^(s)`
/// generator by generator. Fails if the two decisions differ.
pub fn compare_powers_full(
    g: &WeightedOrientedGraph,
    s: u32,
    limits: &Limits,
) -> Result<PowerComparison, SymbolicError> {
    compare(g, s, limits, true)
}

fn compare(g: &WeightedOrientedGraph, s: u32, limits: &Limits, full: bool) -> Result<PowerComparison, SymbolicError> {
    if s < 2 {
        return Err(SymbolicError::PowerTooSmall(s));
    }
    let ideal = edge_ideal(g);
    let symbolic = symbolic_power(g, s, limits)?;

    let mut witness = None;
    for m in symbolic.generators() {
        if !ideal.member_of_power(m, s)? {
            witness = Some(m.clone());
            break;
        }
    }

    let ordinary = match ideal.power_within(s, limits) {
        Ok(p) => Some(p),
        Err(IdealError::Guard(_)) if !full => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(ordinary) = &ordinary {
        if !ordinary.is_subset(&symbolic)? {
            return Err(SymbolicError::InvariantBroken("ordinary power not contained in symbolic power"));
        }
        if full && (*ordinary == symbolic) != witness.is_none() {
            return Err(SymbolicError::InvariantBroken("membership and expansion disagree on equality"));
        }
    }

    Ok(PowerComparison {
        s,
        equal: witness.is_none(),
        witness,
        gen_count_ordinary: ordinary.map(|o| o.len()),
        gen_count_symbolic: symbolic.len(),
        elapsed: Duration::ZERO,
    })
}
