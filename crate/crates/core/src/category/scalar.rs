//! Integer polynomials in the three loop parameters α, β, γ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponents of `(α, β, γ)`.
pub type Monomial = [u32; 3];

/// A polynomial with integer coefficients; zero coefficients are never
/// stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(BTreeMap<Monomial, i64>);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, [0, 0, 0])
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn monomial(c: i64, exps: Monomial) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(exps, c);
        }
        Scalar(m)
    }

    /// `α^a β^b γ^c`.
    pub fn loops(a: u32, b: u32, c: u32) -> Self {
        Self::monomial(1, [a, b, c])
    }

    pub fn alpha_pow(k: u32) -> Self {
        Self::loops(k, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.0.iter()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, i64)>>(terms: I) -> Self {
        let mut out = Scalar::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        let e = self.0.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&m);
        }
    }

    /// Value after substituting integers for the parameters.
    pub fn evaluate(&self, alpha: i64, beta: i64, gamma: i64) -> i64 {
        self.0.iter().map(|(m, &c)| c * alpha.pow(m[0]) * beta.pow(m[1]) * gamma.pow(m[2])).sum()
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (&m, &c) in &rhs.0 {
            out.add_term(m, c);
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.iter().map(|(&m, &c)| (m, -c)).collect())
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (a, &x) in &self.0 {
            for (b, &y) in &rhs.0 {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        out
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, &c)) in self.0.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let abs = c.unsigned_abs();
            let vars: Vec<String> = ["α", "β", "γ"]
                .iter()
                .zip(m)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", vars.join(""))?;
            } else {
                write!(f, "{abs}{}", vars.join(""))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_laws_on_samples() {
        let a = Scalar::from_terms([([1, 0, 0], 2), ([0, 0, 0], -1)]);
        let b = Scalar::from_terms([([0, 1, 2], 3)]);
        let c = Scalar::from_terms([([1, 0, 0], 1), ([0, 1, 0], 1)]);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &Scalar::one(), a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display() {
        let a = Scalar::from_terms([([2, 0, 1], -3), ([0, 0, 0], 1)]);
        assert_eq!(a.to_string(), "1 - 3α^2γ");
        assert_eq!(Scalar::alpha_pow(1).to_string(), "α");
    }
}
