//! Certified enclosures for the one transcendental evaluation in the
//! artifact: the logistic-coordinate embedding h(theta) = sin^2(pi*theta).
//!
//! Endpoints are kept as exact rationals. The sine evaluation runs in
//! fixed-point interval arithmetic (scale 10^-30) with outward rounding,
//! so every enclosure is a true bracket of the analytic value; strict
//! comparisons against certified constants always use the conservative
//! endpoint.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::rational::{rat, Rational};

const SCALE_DIGITS: u32 = 30;

static SCALE: Lazy<BigInt> = Lazy::new(|| BigInt::from(10u8).pow(SCALE_DIGITS));

// pi * 10^30, truncated and truncated+1.
static PI_LO_MANT: Lazy<BigInt> = Lazy::new(|| {
    "3141592653589793238462643383279".parse().unwrap()
});
static PI_HI_MANT: Lazy<BigInt> = Lazy::new(|| {
    "3141592653589793238462643383280".parse().unwrap()
});

/// Rational upper bound on pi, used for choosing truncation depths.
pub fn pi_upper() -> Rational {
    Rational::new(PI_HI_MANT.clone(), SCALE.clone())
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

/// Fixed-point interval [lo, hi] * 10^-30 with outward rounding.
#[derive(Clone, Debug)]
struct Fx {
    lo: BigInt,
    hi: BigInt,
}

impl Fx {
    fn from_rational(r: &Rational) -> Fx {
        let scaled_num = r.numer() * &*SCALE;
        Fx {
            lo: div_floor(&scaled_num, r.denom()),
            hi: div_ceil(&scaled_num, r.denom()),
        }
    }

    fn mul(&self, other: &Fx) -> Fx {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        Fx {
            lo: div_floor(lo, &SCALE),
            hi: div_ceil(hi, &SCALE),
        }
    }

    fn div_uint(&self, n: u64) -> Fx {
        let n = BigInt::from(n);
        Fx {
            lo: div_floor(&self.lo, &n),
            hi: div_ceil(&self.hi, &n),
        }
    }

    fn sub(&self, other: &Fx) -> Fx {
        Fx {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    fn add(&self, other: &Fx) -> Fx {
        Fx {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }
}

/// Closed rational interval certified to contain a real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Enclosure {
        assert!(lo <= hi, "enclosure endpoints out of order");
        Enclosure { lo, hi }
    }

    pub fn exact(v: Rational) -> Enclosure {
        Enclosure { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        Enclosure::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Enclosure::new(lo, hi)
    }

    pub fn scale(&self, c: &Rational) -> Enclosure {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Enclosure::new(a, b)
        } else {
            Enclosure::new(b, a)
        }
    }

    pub fn abs(&self) -> Enclosure {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            Enclosure::new(-self.hi.clone(), -self.lo.clone())
        } else {
            let hi = std::cmp::max(-self.lo.clone(), self.hi.clone());
            Enclosure::new(Rational::zero(), hi)
        }
    }

    /// Largest absolute value attained over the interval.
    pub fn abs_upper(&self) -> Rational {
        std::cmp::max(self.lo.abs(), self.hi.abs())
    }
}

/// Certified enclosure of sin^2(pi * theta) for rational theta.
///
/// theta = 0 and theta = 1/2 (mod 1, up to the h(theta)=h(1-theta)
/// symmetry) return exact endpoints 0 and 1.
pub fn sin_pi_sq(theta: &Rational) -> Enclosure {
    let one = Rational::one();
    let half = rat(1, 2);
    // reduce via period 1 and the sin^2(pi t) = sin^2(pi(1-t)) symmetry
    let mut t = theta - theta.floor();
    if t > half {
        t = &one - &t;
    }
    if t.is_zero() {
        return Enclosure::exact(Rational::zero());
    }
    if t == half {
        return Enclosure::exact(one);
    }

    let pi = Fx {
        lo: PI_LO_MANT.clone(),
        hi: PI_HI_MANT.clone(),
    };
    let u = Fx::from_rational(&t).mul(&pi); // u in (0, pi/2)
    let u_sq = u.mul(&u);

    // alternating Taylor series for sin(u); terms decrease from the start
    // on (0, pi/2], so the truncation error is bounded by the next term
    let mut sum = u.clone();
    let mut term = u;
    for k in 1u64..=16 {
        term = term.mul(&u_sq).div_uint(2 * k * (2 * k + 1));
        if k % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
    }
    let rem = term.mul(&u_sq).div_uint(34 * 35);
    let slack = std::cmp::max(rem.hi.abs(), BigInt::one());
    let mut sin_lo = sum.lo - &slack;
    let sin_hi = sum.hi + &slack;
    if sin_lo.is_negative() {
        sin_lo = BigInt::zero(); // sin(u) >= 0 on [0, pi/2]
    }

    let sq_lo = div_floor(&(&sin_lo * &sin_lo), &SCALE);
    let mut sq_hi = div_ceil(&(&sin_hi * &sin_hi), &SCALE);
    if sq_hi > *SCALE {
        sq_hi = SCALE.clone();
    }
    Enclosure::new(
        Rational::new(sq_lo, SCALE.clone()),
        Rational::new(sq_hi, SCALE.clone()),
    )
}

/// Exact value, or a certified bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceValue {
    Exact(Rational),
    Enclosure(Enclosure),
}

impl DistanceValue {
    pub fn lo(&self) -> Rational {
        match self {
            DistanceValue::Exact(v) => v.clone(),
            DistanceValue::Enclosure(e) => e.lo().clone(),
        }
    }

    pub fn hi(&self) -> Rational {
        match self {
            DistanceValue::Exact(v) => v.clone(),
            DistanceValue::Enclosure(e) => e.hi().clone(),
        }
    }

    /// True value certainly exceeds `bound`.
    pub fn certified_gt(&self, bound: &Rational) -> bool {
        &self.lo() > bound
    }

    /// True value certainly below `bound`.
    pub fn certified_lt(&self, bound: &Rational) -> bool {
        &self.hi() < bound
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        match self {
            DistanceValue::Exact(v) => Some(v),
            DistanceValue::Enclosure(_) => None,
        }
    }

    pub fn midpoint(&self) -> Rational {
        (self.lo() + self.hi()) / rat(2, 1)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn width_bound() -> Rational {
        // well inside the 1e-12 contract
        Rational::new(BigInt::one(), BigInt::from(10u8).pow(18))
    }

    #[test]
    fn exact_endpoints() {
        assert_eq!(sin_pi_sq(&int(0)), Enclosure::exact(int(0)));
        assert_eq!(sin_pi_sq(&rat(1, 2)), Enclosure::exact(int(1)));
        // symmetry and periodicity reductions hit the exact branches too
        assert_eq!(sin_pi_sq(&int(1)), Enclosure::exact(int(0)));
        assert_eq!(sin_pi_sq(&rat(3, 2)), Enclosure::exact(int(1)));
    }

    #[test]
    fn known_algebraic_values() {
        // sin^2(pi/3) = 3/4, sin^2(pi/4) = 1/2, sin^2(pi/6) = 1/4
        for (theta, value) in [
            (rat(1, 3), rat(3, 4)),
            (rat(1, 4), rat(1, 2)),
            (rat(1, 6), rat(1, 4)),
            (rat(2, 3), rat(3, 4)),
        ] {
            let e = sin_pi_sq(&theta);
            assert!(e.contains(&value), "enclosure of {theta} misses {value}");
            assert!(e.width() <= width_bound(), "width too large at {theta}");
        }
    }

    #[test]
    fn enclosure_widths_stay_tight() {
        for q in 1..200i64 {
            let theta = rat(q, 997);
            let e = sin_pi_sq(&theta);
            assert!(e.width() <= width_bound());
            assert!(*e.lo() >= int(0) && *e.hi() <= int(1));
        }
    }

    #[test]
    fn distance_value_certified_sides() {
        let d = DistanceValue::Exact(rat(3, 4));
        assert!(d.certified_gt(&rat(1, 2)));
        assert!(!d.certified_gt(&rat(3, 4)));
        let e = DistanceValue::Enclosure(Enclosure::new(rat(9, 10), int(1)));
        assert!(e.certified_gt(&rat(1, 2)));
        assert!(e.certified_lt(&rat(11, 10)));
        assert!(!e.certified_lt(&int(1)));
    }

    #[test]
    fn interval_abs() {
        let e = Enclosure::new(rat(-1, 2), rat(1, 4)).abs();
        assert_eq!(*e.lo(), int(0));
        assert_eq!(*e.hi(), rat(1, 2));
    }
}
