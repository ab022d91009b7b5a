//! Minors, cofactors and layer-by-layer Laplace expansion.
//!
//! Expansions along any horizontal layer, vertical page or vertical layer
//! use the sign `(-1)^(j+k)` from [`sign_expansion`]. The definitional
//! cofactor sign `(-1)^(i+j+k)` is available through [`cofactor`] but is
//! never used to evaluate a determinant: expanding horizontal layer `i` with
//! it gives `(-1)^i * det(A)`.
//!
//! A commonly quoted recursive formulation signs the horizontal-layer term
//! for `a_{x,i,j}` with `(-1)^(1+x+i+j)`. That agrees with the worked
//! expansions only for odd `x`, so it is not implemented here.

use std::fmt;

use crate::core3d::{positions, Axis, CubicMatrix, Index3};
use crate::determinant::{det_closed, sign_definitional, sign_expansion, Sign};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// `(-1)^(j+k)`; the sign under which every layer expansion holds.
    Expansion,
    /// `(-1)^(i+j+k)`; the textbook-style cofactor sign.
    Definitional,
}

impl SignConvention {
    pub fn sign(self, at: Index3) -> Sign {
        match self {
            SignConvention::Expansion => sign_expansion(at),
            SignConvention::Definitional => sign_definitional(at),
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignConvention::Expansion => "expansion",
            SignConvention::Definitional => "definitional",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cofactor {
    pub at: Index3,
    pub value: Scalar,
    pub convention: SignConvention,
}

/// `M_ijk`: determinant of the matrix left after deleting the layer triple
/// through `at`.
pub fn minor(a: &CubicMatrix, at: Index3) -> Result<Scalar> {
    det_closed(&a.delete_sub(at)?)
}

pub fn cofactor(a: &CubicMatrix, at: Index3, convention: SignConvention) -> Result<Cofactor> {
    let value = convention.sign(at).apply(minor(a, at)?)?;
    Ok(Cofactor { at, value, convention })
}

/// One entry's share of a layer expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceTerm {
    pub at: Index3,
    pub entry: Scalar,
    pub sign: Sign,
    pub minor_value: Scalar,
    /// `sign * entry * minor_value`.
    pub contribution: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTrace {
    pub axis: Axis,
    pub index: usize,
    /// One term per entry of the fixed layer, in canonical layout order of
    /// the two free indices (k outermost, then i, then j).
    pub terms: Vec<TraceTerm>,
    pub total: Scalar,
}

fn check_expansion(a: &CubicMatrix, axis: Axis, index: usize) -> Result<()> {
    if a.order() < 2 {
        return Err(Error::OrderUnderflow);
    }
    if !(1..=a.order()).contains(&index) {
        return Err(Error::LayerOutOfRange { axis, index, order: a.order() });
    }
    Ok(())
}

fn layer(a: &CubicMatrix, axis: Axis, index: usize) -> impl Iterator<Item = Index3> {
    positions(a.order()).filter(move |p| p.coordinate(axis) == index)
}

/// Expands `a` along layer `index` of `axis`, recording every term.
pub fn expand(a: &CubicMatrix, axis: Axis, index: usize) -> Result<ExpansionTrace> {
    expand_with_sign(a, axis, index, sign_expansion)
}

/// [`expand`] with a caller-supplied sign for the top-level terms. Minors are
/// still evaluated with the expansion sign. Used to probe the verification
/// harness with deliberately wrong sign tables.
pub fn expand_with_sign(
    a: &CubicMatrix,
    axis: Axis,
    index: usize,
    sign: fn(Index3) -> Sign,
) -> Result<ExpansionTrace> {
    check_expansion(a, axis, index)?;
    let mut terms = Vec::with_capacity(a.order() * a.order());
    for at in layer(a, axis, index) {
        let entry = a.at(at);
        let minor_value = det_laplace(&a.delete_sub(at)?, axis, 1)?;
        let sign = sign(at);
        let contribution = sign.apply(entry.checked_mul(minor_value)?)?;
        terms.push(TraceTerm { at, entry, sign, minor_value, contribution });
    }
    let total = Scalar::try_sum(terms.iter().map(|t| t.contribution))?;
    Ok(ExpansionTrace { axis, index, terms, total })
}

/// Recursive Laplace evaluation. Order 1 returns the entry; otherwise the
/// fixed layer is expanded and each minor is re-expanded along the same
/// axis at index 1.
pub fn det_laplace(a: &CubicMatrix, axis: Axis, index: usize) -> Result<Scalar> {
    if a.order() == 1 {
        if index != 1 {
            return Err(Error::LayerOutOfRange { axis, index, order: 1 });
        }
        return Ok(a.at(Index3::new(1, 1, 1)));
    }
    check_expansion(a, axis, index)?;
    let mut total = Scalar::ZERO;
    for at in layer(a, axis, index) {
        let entry = a.at(at);
        if entry.is_zero() {
            continue;
        }
        let sub = det_laplace(&a.delete_sub(at)?, axis, 1)?;
        total = total.checked_add(sign_expansion(at).apply(entry.checked_mul(sub)?)?)?;
    }
    Ok(total)
}

/// One trace for every `(axis, index)` pair: `3 * order` traces.
pub fn expand_all(a: &CubicMatrix) -> Result<Vec<ExpansionTrace>> {
    let mut out = Vec::with_capacity(3 * a.order());
    for axis in Axis::ALL {
        for index in 1..=a.order() {
            out.push(expand(a, axis, index)?);
        }
    }
    Ok(out)
}
