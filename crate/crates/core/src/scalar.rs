//! Exact scalar backends.
//!
//! Every verdict in this crate hinges on exact equality at interval endpoints, so the
//! scalar parameter is restricted to exact rational types. Floating point is only used
//! for optional display approximations.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

use crate::error::Error;

pub trait Scalar:
    Clone + Debug + Display + Ord + Num + Signed + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }

    fn floor_int(&self) -> i64;

    fn ceil_int(&self) -> i64;

    fn is_integral(&self) -> bool;

    fn approx(&self) -> f64;

    /// Parses `"p/q"` or `"p"`. Denominators must be nonzero.
    fn parse_rational(s: &str) -> Result<Self, Error>;

    fn half(&self) -> Self {
        self.clone() / Self::from_int(2)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Debug
        + Display
        + Integer
        + Signed
        + From<i64>
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from(n))
    }

    fn floor_int(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("floor out of i64 range")
    }

    fn ceil_int(&self) -> i64 {
        self.ceil().to_integer().to_i64().expect("ceil out of i64 range")
    }

    fn is_integral(&self) -> bool {
        Ratio::is_integer(self)
    }

    fn approx(&self) -> f64 {
        let n = self.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    }

    fn parse_rational(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::MalformedRational(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: T = n.parse().map_err(|_| bad())?;
        let d: T = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator(s.to_string()));
        }
        Ok(Ratio::new(n, d))
    }
}

pub(crate) fn int<F: Scalar>(n: i64) -> F {
    F::from_int(n)
}

pub(crate) fn frac<F: Scalar>(n: i64, d: i64) -> F {
    F::from_frac(n, d)
}
