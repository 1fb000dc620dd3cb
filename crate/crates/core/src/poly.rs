use serde::{Deserialize, Serialize};

/// Real polynomial of degree at most two, `c0 + c1 s + c2 s^2`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Poly2 {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

impl Poly2 {
    pub const ZERO: Poly2 = Poly2 {
        c0: 0.0,
        c1: 0.0,
        c2: 0.0,
    };

    pub fn new(c0: f64, c1: f64, c2: f64) -> Self {
        Self { c0, c1, c2 }
    }

    pub fn linear(c0: f64, c1: f64) -> Self {
        Self { c0, c1, c2: 0.0 }
    }

    pub fn constant(c0: f64) -> Self {
        Self {
            c0,
            c1: 0.0,
            c2: 0.0,
        }
    }

    pub fn eval(&self, s: f64) -> f64 {
        (self.c2 * s + self.c1) * s + self.c0
    }

    pub fn derivative(&self) -> Poly2 {
        Poly2::linear(self.c1, 2.0 * self.c2)
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0.0 && self.c1 == 0.0 && self.c2 == 0.0
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c2 != 0.0 {
            Some(2)
        } else if self.c1 != 0.0 {
            Some(1)
        } else if self.c0 != 0.0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn scale(&self, k: f64) -> Poly2 {
        Poly2::new(k * self.c0, k * self.c1, k * self.c2)
    }

    /// Product, valid when the result still has degree at most two.
    pub fn mul_linear(&self, other: &Poly2) -> Poly2 {
        debug_assert!(self.c2 == 0.0 && other.c2 == 0.0);
        Poly2::new(
            self.c0 * other.c0,
            self.c0 * other.c1 + self.c1 * other.c0,
            self.c1 * other.c1,
        )
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.c0.abs().max(self.c1.abs()).max(self.c2.abs())
    }
}

impl std::ops::Add for Poly2 {
    type Output = Poly2;

    fn add(self, rhs: Poly2) -> Poly2 {
        Poly2::new(self.c0 + rhs.c0, self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl std::ops::Sub for Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: Poly2) -> Poly2 {
        Poly2::new(self.c0 - rhs.c0, self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl std::ops::Neg for Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        Poly2::new(-self.c0, -self.c1, -self.c2)
    }
}
