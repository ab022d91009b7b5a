//! Closed-form determinants of orders 1 to 3 and the double-permutation
//! signed sum used as an independent oracle.
//!
//! For an order-`n` cubic matrix the oracle is
//!
//! ```text
//! det(A) = sum over permutations s, t of {1..n} of
//!          sgn(s) * sgn(t) * a_{1,s(1),t(1)} * ... * a_{n,s(n),t(n)}
//! ```
//!
//! which reproduces the literal 4-term and 36-term closed forms term for
//! term (checked in the tests below, not assumed).

use std::fmt;
use std::ops::Mul;

use crate::core3d::{CubicMatrix, Index3};
use crate::error::Result;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_exponent(exponent: usize) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, x: Scalar) -> Result<Scalar> {
        match self {
            Sign::Plus => Ok(x),
            Sign::Minus => x.checked_neg(),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Sign attached to entry `a_ijk` in a layer expansion: `(-1)^(j+k)`.
///
/// This is the coefficient sign of `a_ijk * M_ijk` inside the closed forms:
/// the permutation pair contributes `(-1)^(i+j)` and `(-1)^(i+k)`, and the
/// `i` parities cancel. It is the only global choice under which every
/// horizontal-layer, vertical-page and vertical-layer expansion returns the
/// determinant.
pub fn sign_expansion(at: Index3) -> Sign {
    Sign::from_exponent(at.j + at.k)
}

/// The definitional cofactor sign `(-1)^(i+j+k)`.
///
/// Kept for cofactor reporting only. Expanding horizontal layer `i` with
/// this sign yields `(-1)^i * det(A)`, so it is never used to evaluate a
/// determinant.
pub fn sign_definitional(at: Index3) -> Sign {
    Sign::from_exponent(at.i + at.j + at.k)
}

/// A signed monomial pattern: `sign * product of a_p for p in positions`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermTemplate {
    pub sign: Sign,
    /// One position per horizontal layer, `i = 1..n` ascending.
    pub positions: Vec<Index3>,
}

impl TermTemplate {
    pub fn evaluate(&self, a: &CubicMatrix) -> Result<SignedTerm> {
        let product = Scalar::try_product(self.positions.iter().map(|&p| a.at(p)))?;
        Ok(SignedTerm {
            sign: self.sign,
            positions: self.positions.clone(),
            value: self.sign.apply(product)?,
        })
    }
}

/// A term template evaluated on a concrete matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTerm {
    pub sign: Sign,
    pub positions: Vec<Index3>,
    /// `sign` times the product of the addressed entries.
    pub value: Scalar,
}

/// All permutations of `1..=n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 1..=n {
            if !prefix.contains(&x) {
                prefix.push(x);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out
}

fn parity(perm: &[usize]) -> Sign {
    let inversions =
        perm.iter().enumerate().map(|(a, x)| perm[a + 1..].iter().filter(|y| *y < x).count()).sum();
    Sign::from_exponent(inversions)
}

/// The `(n!)^2` templates of the double-permutation expansion. Template
/// positions are `(i, s(i), t(i))` with sign `sgn(s) * sgn(t)`.
pub fn perm_terms(order: usize) -> Vec<TermTemplate> {
    let perms = permutations(order);
    let mut out = Vec::with_capacity(perms.len() * perms.len());
    for s in &perms {
        for t in &perms {
            out.push(TermTemplate {
                sign: parity(s) * parity(t),
                positions: (0..order).map(|x| Index3::new(x + 1, s[x], t[x])).collect(),
            });
        }
    }
    out
}

/// Evaluates every permutation template on `a`.
pub fn signed_terms(a: &CubicMatrix) -> Result<Vec<SignedTerm>> {
    perm_terms(a.order()).iter().map(|t| t.evaluate(a)).collect()
}

/// Determinant as the double-permutation signed sum.
pub fn det_permutation(a: &CubicMatrix) -> Result<Scalar> {
    Scalar::try_sum(signed_terms(a)?.into_iter().map(|t| t.value))
}

/// The order-2 closed form, subscripts written as `ijk`.
pub const ORDER2_TERMS: [(i8, [u16; 2]); 4] =
    [(1, [111, 222]), (-1, [112, 221]), (-1, [121, 212]), (1, [122, 211])];

/// The order-3 closed form, 36 signed monomials, subscripts written as `ijk`.
#[rustfmt::skip]
pub const ORDER3_TERMS: [(i8, [u16; 3]); 36] = [
    ( 1, [111, 222, 333]), (-1, [111, 232, 323]), (-1, [111, 223, 332]), ( 1, [111, 233, 322]),
    (-1, [112, 221, 333]), ( 1, [112, 223, 331]), ( 1, [112, 231, 323]), (-1, [112, 233, 321]),
    ( 1, [113, 221, 332]), (-1, [113, 222, 331]), (-1, [113, 231, 322]), ( 1, [113, 232, 321]),
    (-1, [121, 212, 333]), ( 1, [121, 213, 332]), ( 1, [121, 232, 313]), (-1, [121, 233, 312]),
    ( 1, [122, 211, 333]), (-1, [122, 213, 331]), (-1, [122, 231, 313]), ( 1, [122, 233, 311]),
    (-1, [123, 211, 332]), ( 1, [123, 212, 331]), ( 1, [123, 231, 312]), (-1, [123, 232, 311]),
    ( 1, [131, 212, 323]), (-1, [131, 213, 322]), (-1, [131, 222, 313]), ( 1, [131, 223, 312]),
    (-1, [132, 211, 323]), ( 1, [132, 213, 321]), ( 1, [132, 221, 313]), (-1, [132, 223, 311]),
    ( 1, [133, 211, 322]), (-1, [133, 212, 321]), (-1, [133, 221, 312]), ( 1, [133, 222, 311]),
];

fn decode(code: u16) -> Index3 {
    let code = code as usize;
    Index3::new(code / 100, code / 10 % 10, code % 10)
}

fn decode_term(sign: i8, codes: &[u16]) -> TermTemplate {
    TermTemplate {
        sign: if sign > 0 { Sign::Plus } else { Sign::Minus },
        positions: codes.iter().copied().map(decode).collect(),
    }
}

/// The literal closed-form term list for `order` (1, 2 or 3) as templates.
pub fn closed_form_terms(order: usize) -> Vec<TermTemplate> {
    match order {
        1 => vec![decode_term(1, &[111])],
        2 => ORDER2_TERMS.iter().map(|(s, c)| decode_term(*s, c)).collect(),
        3 => ORDER3_TERMS.iter().map(|(s, c)| decode_term(*s, c)).collect(),
        _ => Vec::new(),
    }
}

/// Determinant from the literal closed forms.
pub fn det_closed(a: &CubicMatrix) -> Result<Scalar> {
    let e = |i, j, k| a.at(Index3::new(i, j, k));
    match a.order() {
        1 => Ok(e(1, 1, 1)),
        2 => {
            let m = |x: Scalar, y: Scalar| x.checked_mul(y);
            m(e(1, 1, 1), e(2, 2, 2))?
                .checked_sub(m(e(1, 1, 2), e(2, 2, 1))?)?
                .checked_sub(m(e(1, 2, 1), e(2, 1, 2))?)?
                .checked_add(m(e(1, 2, 2), e(2, 1, 1))?)
        }
        _ => Scalar::try_sum(
            closed_form_terms(3)
                .iter()
                .map(|t| t.evaluate(a).map(|term| term.value))
                .collect::<Result<Vec<_>>>()?,
        ),
    }
}
