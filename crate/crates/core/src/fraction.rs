//! Reduced fractions and the candidate sets searched for the circular
//! chromatic index.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("numerator must be positive")]
    ZeroNumerator,
    #[error("cannot parse fraction {0:?}")]
    Parse(String),
    #[error("empty interval: {lo} is not below {hi}")]
    EmptyInterval { lo: Fraction, hi: Fraction },
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A positive rational `p/q` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: u64,
    q: u64,
}

impl Fraction {
    pub fn new(p: u64, q: u64) -> Result<Self, FractionError> {
        if q == 0 {
            return Err(FractionError::ZeroDenominator);
        }
        if p == 0 {
            return Err(FractionError::ZeroNumerator);
        }
        let g = gcd(p, q);
        Ok(Fraction { p: p / g, q: q / g })
    }

    pub fn integer(k: u64) -> Self {
        Fraction::new(k, 1).expect("positive integer")
    }

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    pub fn floor(&self) -> u64 {
        self.p / self.q
    }

    pub fn ceil(&self) -> u64 {
        self.p.div_ceil(self.q)
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Fraction {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FractionError::Parse(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = p.trim().parse().map_err(|_| bad())?;
                let q = q.trim().parse().map_err(|_| bad())?;
                Fraction::new(p, q)
            }
            None => Fraction::new(s.parse().map_err(|_| bad())?, 1),
        }
    }
}

/// Reduced fractions `v` with `lo < v <= hi` and denominator at most
/// `qmax`, ascending.
pub fn enumerate_candidates(
    lo: Fraction,
    hi: Fraction,
    qmax: u64,
) -> Result<Vec<Fraction>, FractionError> {
    if lo >= hi {
        return Err(FractionError::EmptyInterval { lo, hi });
    }
    let mut out = Vec::new();
    for q in 1..=qmax {
        // p/q > lo  <=>  p > q*lo.p/lo.q
        let p_min = q * lo.p / lo.q + 1;
        let p_max = q * hi.p / hi.q;
        for p in p_min..=p_max {
            if gcd(p, q) == 1 {
                out.push(Fraction { p, q });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The current search window for the circular chromatic index: `lo` is
/// known not to be achievable, `hi` is known to be achievable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchInterval {
    lo: Fraction,
    hi: Fraction,
}

impl SearchInterval {
    pub fn new(lo: Fraction, hi: Fraction) -> Result<Self, FractionError> {
        if lo >= hi {
            return Err(FractionError::EmptyInterval { lo, hi });
        }
        Ok(SearchInterval { lo, hi })
    }

    pub fn lo(&self) -> Fraction {
        self.lo
    }

    pub fn hi(&self) -> Fraction {
        self.hi
    }

    /// Record an unachievable value. Only ever raises `lo`.
    pub fn raise_lo(&mut self, f: Fraction) {
        if f > self.lo && f < self.hi {
            self.lo = f;
        }
    }

    /// Record an achievable value. Only ever lowers `hi`.
    pub fn lower_hi(&mut self, f: Fraction) {
        if f < self.hi && f > self.lo {
            self.hi = f;
        }
    }

    pub fn contains_strictly(&self, f: Fraction) -> bool {
        self.lo < f && f < self.hi
    }

    /// True when no fraction with denominator at most `qmax` lies strictly
    /// between the endpoints.
    pub fn resolved(&self, qmax: u64) -> bool {
        (2..=qmax).all(|q| stage_candidates(self, q).is_empty())
    }
}

impl fmt::Display for SearchInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}]", self.lo, self.hi)
    }
}

/// Reduced fractions with denominator exactly `q` strictly inside the
/// interval, ascending.
pub fn stage_candidates(interval: &SearchInterval, q: u64) -> Vec<Fraction> {
    let (lo, hi) = (interval.lo, interval.hi);
    let p_min = q * lo.p / lo.q + 1;
    // p/q < hi  <=>  p*hi.q < q*hi.p
    let p_end = (q * hi.p).div_ceil(hi.q);
    (p_min..p_end)
        .filter(|&p| gcd(p, q) == 1)
        .map(|p| Fraction { p, q })
        .collect()
}
