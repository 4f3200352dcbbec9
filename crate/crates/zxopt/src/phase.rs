// zxopt - exhaustive search optimisation of quantum circuits
//         using the ZX-calculus
// Copyright (C) 2026 - the zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact spider phases: rational multiples of pi, normalised into `[0, 2pi)`.

use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// A spider phase, stored as an exact rational multiple of pi.
///
/// The rational is always kept reduced and normalised into `[0, 2)`, so two
/// equal phases have identical representation and the T metric can simply
/// look at the denominator.
///
/// ```
/// use zxopt::phase::Phase;
///
/// let t = Phase::new(1, 4);
/// assert_eq!(t + t, Phase::new(1, 2));
/// assert_eq!(Phase::new(3, 2) + Phase::new(3, 4), Phase::new(1, 4));
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Phase(Rational64);

impl Phase {
    /// The zero phase.
    pub fn zero() -> Self {
        Phase(Rational64::zero())
    }

    /// A phase of exactly pi.
    pub fn pi() -> Self {
        Phase(Rational64::from_integer(1))
    }

    /// The phase `num/den * pi`, reduced and normalised modulo 2pi.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "phase denominator must be nonzero");
        Phase::from_rational(Rational64::new(num, den))
    }

    fn from_rational(r: Rational64) -> Self {
        let two = Rational64::from_integer(2);
        let mut r = r % two;
        if r.is_negative() {
            r += two;
        }
        Phase(r)
    }

    /// Numerator of the reduced representation; always in `[0, 2 * denom)`.
    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Denominator of the reduced representation; always positive.
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Exactly pi.
    pub fn is_pi(&self) -> bool {
        self.numer() == 1 && self.denom() == 1
    }

    /// A multiple of pi, i.e. 0 or pi.
    pub fn is_pauli(&self) -> bool {
        self.denom() == 1
    }

    /// An odd multiple of pi/2, i.e. pi/2 or 3pi/2.
    pub fn is_proper_clifford(&self) -> bool {
        self.denom() == 2
    }

    /// An odd multiple of pi/4 — the phases counted by the T metric.
    pub fn is_t_phase(&self) -> bool {
        self.denom() == 4
    }

    /// The angle in radians.
    pub fn to_radians(&self) -> f64 {
        std::f64::consts::PI * (self.numer() as f64) / (self.denom() as f64)
    }
}

impl Add for Phase {
    type Output = Phase;

    fn add(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 + rhs.0)
    }
}

impl Neg for Phase {
    type Output = Phase;

    fn neg(self) -> Phase {
        Phase::from_rational(-self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhaseParseError {
    #[error("malformed phase `{0}`, expected `num/den`")]
    Malformed(String),
    #[error("phase denominator must be positive in `{0}`")]
    BadDenominator(String),
    #[error("phase not reduced: `{0}`")]
    NotReduced(String),
    #[error("phase not normalised into [0, 2pi): `{0}`")]
    NotNormalised(String),
}

impl FromStr for Phase {
    type Err = PhaseParseError;

    /// Strict parser for the wire format. The input must already be in
    /// canonical form: reduced, denominator positive, value in `[0, 2)`.
    fn from_str(s: &str) -> Result<Phase, PhaseParseError> {
        let malformed = || PhaseParseError::Malformed(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<i64>().map_err(|_| malformed())?,
                d.trim().parse::<i64>().map_err(|_| malformed())?,
            ),
            None => (s.trim().parse::<i64>().map_err(|_| malformed())?, 1),
        };
        if den <= 0 {
            return Err(PhaseParseError::BadDenominator(s.to_string()));
        }
        let reduced = Rational64::new(num, den);
        if *reduced.numer() != num || *reduced.denom() != den {
            return Err(PhaseParseError::NotReduced(s.to_string()));
        }
        if num < 0 || num >= 2 * den {
            return Err(PhaseParseError::NotNormalised(s.to_string()));
        }
        Ok(Phase(reduced))
    }
}
