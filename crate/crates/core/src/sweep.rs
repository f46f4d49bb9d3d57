//! Parameter sweeps of the clique-partition construction against the
//! capacity bounds, with locality chosen as a function of `n`.

use std::fmt;
use std::str::FromStr;

use crate::bounds::capacity_bounds;
use crate::code::rank_by_components;
use crate::constructions::{clique_partition, connected_chain, part_count};
use crate::error::{Error, Result};
use crate::Rational;

/// How the locality grows with `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalityRule {
    Const(usize),
    /// `⌈√n⌉`
    Sqrt,
    /// `⌈log₂ n⌉`
    Log,
}

impl LocalityRule {
    /// Locality requested by the rule at `n`, before clamping to `2..=n-1`.
    pub fn raw(&self, n: usize) -> usize {
        match *self {
            LocalityRule::Const(k) => k,
            LocalityRule::Sqrt => {
                let s = n.isqrt();
                if s * s < n {
                    s + 1
                } else {
                    s
                }
            }
            LocalityRule::Log => match n {
                0 | 1 => 0,
                _ => (usize::BITS - (n - 1).leading_zeros()) as usize,
            },
        }
    }

    /// Locality actually used at `n`; `None` when no valid locality exists
    /// (`n < 3`).
    pub fn at(&self, n: usize) -> Option<usize> {
        (n >= 3).then(|| self.raw(n).clamp(2, n - 1))
    }
}

impl FromStr for LocalityRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sqrt" => Ok(Self::Sqrt),
            "log" => Ok(Self::Log),
            _ => {
                let k = s
                    .strip_prefix("const:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::InvalidParameters(format!(
                            "unknown locality rule {s:?} (expected const:<k>, sqrt or log)"
                        ))
                    })?;
                if k < 2 {
                    return Err(Error::InvalidParameters(format!(
                        "constant locality must be at least 2, got {k}"
                    )));
                }
                Ok(Self::Const(k))
            }
        }
    }
}

impl fmt::Display for LocalityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Const(k) => write!(f, "const:{k}"),
            Self::Sqrt => f.write_str("sqrt"),
            Self::Log => f.write_str("log"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub r: usize,
    pub p: usize,
    pub rank_achieved: usize,
    pub rate_achieved: Rational,
    pub lower_bound: Rational,
    pub upper_bound: Rational,
    pub connected_rank: Option<usize>,
    pub connected_rate: Option<Rational>,
}

pub fn sweep_row(n: usize, r: usize, with_connected: bool) -> Result<SweepRow> {
    let bounds = capacity_bounds(n, r)?;
    let rank = rank_by_components(&clique_partition(n, r)?);
    let connected_rank = if with_connected {
        Some(connected_chain(n, r)?.augmented_adjacency().rank())
    } else {
        None
    };
    let rate = |rank: usize| Rational::new((n - rank) as u64, n as u64);
    Ok(SweepRow {
        n,
        r,
        p: part_count(n, r),
        rank_achieved: rank,
        rate_achieved: rate(rank),
        lower_bound: bounds.lower,
        upper_bound: bounds.upper,
        connected_rank,
        connected_rate: connected_rank.map(rate),
    })
}

/// One row per `n` in `n_min..=n_max`. Values of `n` below 3 admit no
/// locality in `2..=n-1` and are skipped.
pub fn sweep(
    n_min: usize,
    n_max: usize,
    rule: LocalityRule,
    with_connected: bool,
) -> Result<Vec<SweepRow>> {
    if n_min < 2 {
        return Err(Error::InvalidParameters(format!(
            "n_min must be at least 2, got {n_min}"
        )));
    }
    if n_max < n_min {
        return Err(Error::InvalidParameters(format!(
            "n_max ({n_max}) is below n_min ({n_min})"
        )));
    }
    (n_min..=n_max)
        .filter_map(|n| rule.at(n).map(|r| (n, r)))
        .map(|(n, r)| sweep_row(n, r, with_connected))
        .collect()
}
