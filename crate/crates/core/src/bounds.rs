//! Capacity bounds and rank certificates.
//!
//! For `n` servers and locality `r` the best achievable rate lies between
//! `1 - ⌈n/(r+1)⌉/n` and `1 - ⌊n/(r+1)⌋/n`. The lower end is met by
//! [`clique_partition`](crate::constructions::clique_partition); the upper end
//! follows from a rank lower bound on any symmetric matrix with unit diagonal
//! and row weight at most `r + 1`, which [`rank_certificate`] witnesses
//! explicitly for a given matrix.

use serde::ser::{Serialize, Serializer};

use crate::code::StorageCode;
use crate::constructions::check_params;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::Rational;

/// Closed-form bounds on the capacity for `n` vertices and locality `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityBounds {
    pub n: usize,
    pub r: usize,
    pub lower: Rational,
    pub upper: Rational,
}

impl CapacityBounds {
    pub fn gap(&self) -> Rational {
        self.upper - self.lower
    }

    pub fn contains(&self, rate: Rational) -> bool {
        self.lower <= rate && rate <= self.upper
    }
}

pub fn capacity_bounds(n: usize, r: usize) -> Result<CapacityBounds> {
    check_params(n, r)?;
    let (n64, block) = (n as u64, r as u64 + 1);
    Ok(CapacityBounds {
        n,
        r,
        lower: Rational::new(n64 - n64.div_ceil(block), n64),
        upper: Rational::new(n64 - n64 / block, n64),
    })
}

/// One step of a certificate: `column` was chosen to cover `pivot_row`.
/// Both are 1-based vertex labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pick {
    pub pivot_row: usize,
    pub column: usize,
}

/// An ordered list of picks witnessing `size` linearly independent columns.
///
/// Each picked column has a 1 in its pivot row while every earlier picked
/// column has a 0 there. That triangular pattern rules out any vanishing
/// combination, so `rank ≥ size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    n: usize,
    picks: Vec<Pick>,
}

impl RankCertificate {
    /// Wraps arbitrary picks, e.g. ones read from a file. Nothing is checked
    /// here; use [`verify_certificate`].
    pub fn new(n: usize, picks: Vec<Pick>) -> Self {
        Self { n, picks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn picks(&self) -> &[Pick] {
        &self.picks
    }

    pub fn size(&self) -> usize {
        self.picks.len()
    }

    /// Rate bound `1 - size/n` implied by the certificate.
    pub fn rate_upper_bound(&self) -> Rational {
        Rational::new((self.n - self.size().min(self.n)) as u64, self.n as u64)
    }

    /// Rows (1-based) first covered by each pick, in pick order.
    pub fn coverage(&self, a: &BitMatrix) -> Result<Vec<Vec<usize>>> {
        a.require_square()?;
        let n = a.n_rows();
        let mut covered = vec![false; n];
        self.picks
            .iter()
            .map(|pick| {
                let col = a.column(pick.column.wrapping_sub(1))?;
                Ok(col
                    .ones()
                    .filter(|&row| !std::mem::replace(&mut covered[row], true))
                    .map(|row| row + 1)
                    .collect())
            })
            .collect()
    }
}

/// JSON layout: `{"n": .., "picks": [[i, j], ..], "size": ..}`.
impl Serialize for RankCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(serde::Serialize)]
        struct Repr {
            n: usize,
            picks: Vec<[usize; 2]>,
            size: usize,
        }
        Repr {
            n: self.n,
            picks: self.picks.iter().map(|p| [p.pivot_row, p.column]).collect(),
            size: self.size(),
        }
        .serialize(serializer)
    }
}

fn check_certifiable(a: &BitMatrix) -> Result<()> {
    a.require_square()?;
    if let Some((row, col)) = a.first_asymmetry()? {
        return Err(Error::NotSymmetric { row, col });
    }
    if let Some(i) = (0..a.n_rows()).find(|&i| !a.get(i, i)) {
        return Err(Error::ZeroDiagonal(i));
    }
    Ok(())
}

/// Greedy set of independent columns of a symmetric unit-diagonal matrix.
///
/// Rows are visited in ascending order. A row already holding a 1 in some
/// picked column is skipped; otherwise the smallest-index unpicked column
/// with a 1 in that row is picked. The diagonal guarantees such a column
/// exists. Each pick covers at most `w_max` rows (column weight equals row
/// weight by symmetry) and every row ends up covered, so the size is at
/// least `⌈n / w_max⌉`.
pub fn rank_certificate(a: &BitMatrix) -> Result<RankCertificate> {
    check_certifiable(a)?;
    let n = a.n_rows();
    let mut covered = BitVector::zeros(n);
    let mut picked = vec![false; n];
    let mut picks = Vec::new();
    for i in 0..n {
        if covered.get(i) {
            continue;
        }
        let row = a.row(i)?;
        let Some(j) = row.ones().find(|&j| !picked[j]) else {
            continue;
        };
        picked[j] = true;
        // column j equals row j
        covered.or_assign(&a.row(j)?)?;
        picks.push(Pick {
            pivot_row: i + 1,
            column: j + 1,
        });
    }
    Ok(RankCertificate { n, picks })
}

/// Checks a certificate against `a`: triangular witness pick by pick, then an
/// independent rank computation on the selected columns. Any malformed input
/// (wrong `n`, labels out of range, non-square matrix) yields `false`.
pub fn verify_certificate(a: &BitMatrix, cert: &RankCertificate) -> bool {
    let n = a.n_rows();
    if !a.is_square() || cert.n != n {
        return false;
    }
    let in_range = |x: usize| (1..=n).contains(&x);
    if !cert
        .picks
        .iter()
        .all(|p| in_range(p.pivot_row) && in_range(p.column))
    {
        return false;
    }
    for (k, pick) in cert.picks.iter().enumerate() {
        let row = pick.pivot_row - 1;
        if !a.get(row, pick.column - 1) {
            return false;
        }
        if cert.picks[..k]
            .iter()
            .any(|earlier| a.get(row, earlier.column - 1))
        {
            return false;
        }
    }
    if cert.picks.is_empty() {
        return true;
    }
    let cols: Vec<usize> = cert.picks.iter().map(|p| p.column - 1).collect();
    a.select_columns(&cols)
        .map(|sub| sub.rank() == cert.size())
        .unwrap_or(false)
}

/// Rate upper bound for `code` obtained from the certificate of its parity
/// matrix. Never below the actual rate.
pub fn rate_upper_bound_from_certificate(code: &StorageCode) -> Rational {
    rank_certificate(code.parity())
        .expect("augmented adjacency matrices are symmetric with unit diagonal")
        .rate_upper_bound()
}
