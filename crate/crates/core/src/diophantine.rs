//! Extended Euclid and two-variable linear Diophantine equations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Integer solutions of `a·x + b·y = c`, parametrized as
/// `(x0 + dx·j, y0 + dy·j)` for `j ∈ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionLine {
    pub x0: BigInt,
    pub y0: BigInt,
    pub dx: BigInt,
    pub dy: BigInt,
}

impl SolutionLine {
    pub fn at(&self, j: &BigInt) -> (BigInt, BigInt) {
        (&self.x0 + &self.dx * j, &self.y0 + &self.dy * j)
    }
}

/// Solves `a·x + b·y = c` over the integers. `None` when there is no
/// solution or when `a = b = 0` (the solution set is then not a line).
pub fn solve_linear(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<SolutionLine> {
    if a.is_zero() && b.is_zero() {
        return None;
    }
    let (g, x, y) = extended_gcd(a, b);
    if !c.is_multiple_of(&g) {
        return None;
    }
    let k = c / &g;
    Some(SolutionLine {
        x0: x * &k,
        y0: y * &k,
        dx: b / &g,
        dy: -(a / &g),
    })
}
