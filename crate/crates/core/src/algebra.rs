//! Dual numbers `x + yε` (ε² = 0) and double numbers `X + Yj` (j² = 1).
//!
//! Double numbers are stored in light-cone coordinates `⟨u, v⟩` with
//! `u = X + Y`, `v = X - Y`, where multiplication is componentwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// A dual number `[re, im] = re + im·ε`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Dual {
    pub re: Rational,
    pub im: Rational,
}

impl Dual {
    pub fn new(re: impl Into<Rational>, im: impl Into<Rational>) -> Dual {
        Dual {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn one() -> Dual {
        Dual::new(1, 0)
    }

    pub fn epsilon() -> Dual {
        Dual::new(0, 1)
    }
}

impl Add for &Dual {
    type Output = Dual;
    fn add(self, rhs: &Dual) -> Dual {
        Dual {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Dual {
    type Output = Dual;
    fn sub(self, rhs: &Dual) -> Dual {
        Dual {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Dual {
    type Output = Dual;
    fn mul(self, rhs: &Dual) -> Dual {
        Dual {
            re: &self.re * &rhs.re,
            im: &self.re * &rhs.im + &rhs.re * &self.im,
        }
    }
}

impl Neg for &Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.re, self.im)
    }
}

pub fn dual_add(a: &Dual, b: &Dual) -> Dual {
    a + b
}

pub fn dual_mul(a: &Dual, b: &Dual) -> Dual {
    a * b
}

/// A double number in light-cone coordinates `⟨u, v⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Double {
    pub u: Rational,
    pub v: Rational,
}

impl Double {
    pub fn new(u: impl Into<Rational>, v: impl Into<Rational>) -> Double {
        Double {
            u: u.into(),
            v: v.into(),
        }
    }

    /// `X + Yj` in standard form.
    pub fn from_standard(x: &Rational, y: &Rational) -> Double {
        Double { u: x + y, v: x - y }
    }

    /// Standard-form `(X, Y)`.
    pub fn to_standard(&self) -> (Rational, Rational) {
        let half = Rational::frac(1, 2);
        ((&self.u + &self.v) * &half, (&self.u - &self.v) * &half)
    }

    pub fn one() -> Double {
        Double::new(1, 1)
    }

    /// The unit `j`.
    pub fn j() -> Double {
        Double::new(1, -1)
    }
}

impl Add for &Double {
    type Output = Double;
    fn add(self, rhs: &Double) -> Double {
        Double {
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        }
    }
}

impl Sub for &Double {
    type Output = Double;
    fn sub(self, rhs: &Double) -> Double {
        Double {
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        }
    }
}

impl Mul for &Double {
    type Output = Double;
    fn mul(self, rhs: &Double) -> Double {
        Double {
            u: &self.u * &rhs.u,
            v: &self.v * &rhs.v,
        }
    }
}

impl Neg for &Double {
    type Output = Double;
    fn neg(self) -> Double {
        Double {
            u: -&self.u,
            v: -&self.v,
        }
    }
}

impl fmt::Display for Double {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.u, self.v)
    }
}

pub fn double_add(a: &Double, b: &Double) -> Double {
    a + b
}

pub fn double_mul(a: &Double, b: &Double) -> Double {
    a * b
}

pub fn std_to_lightcone(x: &Rational, y: &Rational) -> Double {
    Double::from_standard(x, y)
}

pub fn lightcone_to_std(d: &Double) -> (Rational, Rational) {
    d.to_standard()
}
