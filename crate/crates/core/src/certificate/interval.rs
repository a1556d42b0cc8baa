//! Closed intervals with outward rounding.
//!
//! Every operation is computed in round-to-nearest and then widened by one
//! ulp on each side. `+ − × ÷ √` are correctly rounded in IEEE 754, so the
//! exact real result always lies inside the widened enclosure.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up(x: f64) -> f64 {
    x.next_up()
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    /// The degenerate interval `[x, x]`; `x` is taken as exact.
    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(self) -> bool {
        self.contains(0.0)
    }

    /// Splits at the midpoint.
    pub fn bisect(self) -> (Self, Self) {
        let m = self.midpoint();
        (Self::new(self.lo, m), Self::new(m, self.hi))
    }

    /// Tight enclosure of `x²`.
    pub fn sqr(self) -> Self {
        if self.lo >= 0.0 {
            Self::new(down(self.lo * self.lo), up(self.hi * self.hi))
        } else if self.hi <= 0.0 {
            Self::new(down(self.hi * self.hi), up(self.lo * self.lo))
        } else {
            let m = self.lo.abs().max(self.hi);
            Self::new(0.0, up(m * m))
        }
    }

    /// `None` unless the interval is entirely non-negative.
    pub fn sqrt(self) -> Option<Self> {
        if self.lo < 0.0 {
            return None;
        }
        Some(Self::new(down(self.lo.sqrt()).max(0.0), up(self.hi.sqrt())))
    }

    /// `None` when the divisor contains zero.
    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        if rhs.contains_zero() {
            return None;
        }
        let q = [self.lo / rhs.lo, self.lo / rhs.hi, self.hi / rhs.lo, self.hi / rhs.hi];
        Some(hull(q))
    }
}

fn hull(v: [f64; 4]) -> Interval {
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Interval::new(down(lo), up(hi))
}

impl Add for Interval {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(down(self.lo + rhs.lo), up(self.hi + rhs.hi))
    }
}

impl Sub for Interval {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(down(self.lo - rhs.hi), up(self.hi - rhs.lo))
    }
}

impl Mul for Interval {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        hull([self.lo * rhs.lo, self.lo * rhs.hi, self.hi * rhs.lo, self.hi * rhs.hi])
    }
}

impl Neg for Interval {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.hi, -self.lo)
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Self {
        Self::point(x)
    }
}
