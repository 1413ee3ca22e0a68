//! Closed-form upper bounds on proximity and remoteness.
//!
//! Everything here is exact rational arithmetic over `i64`. The functions
//! evaluate the stated formulas only; deciding whether a bound applies to a
//! particular graph (connectivity, order range, freeness class) is the
//! audit's job. Two of the closed forms are known to disagree with the
//! sequence evaluations that certify them (see the audit module), so the
//! formulas are exposed individually rather than fused into a verdict.

use num_rational::Ratio;
use serde::Serialize;

pub type Rational = Ratio<i64>;

/// Exact rational as a `{num, den}` JSON object. `Ratio` keeps the
/// denominator positive and the fraction reduced, so the encoding is
/// canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RatJson {
    pub num: i64,
    pub den: i64,
}

impl From<RatJson> for Rational {
    fn from(r: RatJson) -> Self {
        Ratio::new(r.num, r.den)
    }
}

impl From<Rational> for RatJson {
    fn from(r: Rational) -> Self {
        RatJson {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

/// The C4-free ball threshold `delta* = delta^2 - 2*floor(delta/2) + 1`.
///
/// In a C4-free graph every vertex has at least this many vertices within
/// distance 2 (itself included).
pub fn delta_star(delta: u64) -> u64 {
    delta * delta - 2 * (delta / 2) + 1
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

/// `rho(G) <= n/2` for every connected graph of order n >= 2; equality
/// exactly on paths.
pub fn bound_rho_order(n: u64) -> Rational {
    assert!(n >= 2, "order bound needs n >= 2");
    rat(n as i64, 2)
}

/// `pi(G) <= (n+1)/4`, plus `1/(4(n-1))` when n is even; equality exactly
/// on paths and cycles.
pub fn bound_pi_order(n: u64) -> Rational {
    assert!(n >= 2, "order bound needs n >= 2");
    let n = n as i64;
    let base = rat(n + 1, 4);
    if n % 2 == 0 {
        base + rat(1, 4 * (n - 1))
    } else {
        base
    }
}

/// `rho(G) <= 3n/(2(delta+1)) + 7/2` for delta >= 2.
pub fn bound_rho_mindeg(n: u64, delta: u64) -> Rational {
    assert!(delta >= 2, "min-degree bound needs delta >= 2");
    rat(3 * n as i64, 2 * (delta as i64 + 1)) + rat(7, 2)
}

/// `pi(G) <= 3n/(4(delta+1)) + 3` for delta >= 2.
pub fn bound_pi_mindeg(n: u64, delta: u64) -> Rational {
    assert!(delta >= 2, "min-degree bound needs delta >= 2");
    rat(3 * n as i64, 4 * (delta as i64 + 1)) + rat(3, 1)
}

/// Triangle-free remoteness: `2*ceil((n-3delta)/(2delta)) + 2 - delta/(n-1)`.
///
/// Stated for delta >= 3; the certified range of the underlying construction
/// is n >= 6delta.
pub fn bound_rho_trianglefree(n: u64, delta: u64) -> Rational {
    assert!(delta >= 3, "triangle-free bounds need delta >= 3");
    assert!(n >= 2);
    let (n, delta) = (n as i64, delta as i64);
    rat(2 * ceil_div(n - 3 * delta, 2 * delta), 1) + rat(2, 1) - rat(delta, n - 1)
}

/// Triangle-free proximity closed form:
/// `n/(2delta) + 2 - 5/(2delta) - (21delta^2 - 8delta - 3)/(2delta(n-1))`.
///
/// Known to disagree with the sequence certificate it is derived from; the
/// audit reports it informationally.
pub fn bound_pi_trianglefree(n: u64, delta: u64) -> Rational {
    assert!(delta >= 3, "triangle-free bounds need delta >= 3");
    assert!(n >= 2);
    let (n, delta) = (n as i64, delta as i64);
    rat(n, 2 * delta) + rat(2, 1) - rat(5, 2 * delta)
        - rat(21 * delta * delta - 8 * delta - 3, 2 * delta * (n - 1))
}

/// C4-free remoteness: `(5/2) * floor(n/delta*) + 2`.
pub fn bound_rho_c4free(n: u64, delta: u64) -> Rational {
    assert!(delta >= 3, "C4-free bounds need delta >= 3");
    let q = (n / delta_star(delta)) as i64;
    rat(5 * q, 2) + rat(2, 1)
}

/// C4-free proximity: `(5/4) * floor(n/delta*) + 147/32`.
pub fn bound_pi_c4free(n: u64, delta: u64) -> Rational {
    assert!(delta >= 3, "C4-free bounds need delta >= 3");
    let q = (n / delta_star(delta)) as i64;
    rat(5 * q, 4) + rat(147, 32)
}
