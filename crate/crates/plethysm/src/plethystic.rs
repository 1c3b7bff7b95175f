//! Plethystic semistandard tableaux: fillings of an outer diagram by inner
//! tableaux, semistandard with respect to the ≺ tableau order.
//!
//! Because ≺ is a total order on same-shape tableaux, a filling of [ν] by
//! μ-tableaux is semistandard exactly when the map cell → alphabet index is
//! an ordinary SSYT of shape ν over the sorted alphabet. Enumeration reuses
//! the SSYT machinery on indices and substitutes the alphabet back in.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{Composition, Partition};
use crate::tableau::{enumerate_ssyt, SemistandardTableau};
use crate::Error;

/// A plethystic semistandard tableau of shape μ^ν: each cell of [ν] holds a
/// semistandard μ-tableau; rows weakly increase and columns strictly
/// increase under ≺.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Vec<Vec<u64>>>>", into = "Vec<Vec<Vec<Vec<u64>>>>")]
pub struct PlethysticTableau {
    outer_shape: Partition,
    inner_shape: Partition,
    cells: Vec<Vec<SemistandardTableau>>,
}

impl PlethysticTableau {
    pub fn new(cells: Vec<Vec<SemistandardTableau>>) -> Result<Self, Error> {
        let outer_shape = Partition::new(
            cells.iter().map(|r| r.len() as u64).collect::<Vec<_>>(),
        )
        .map_err(|_| Error::InvalidTableau {
            reason: "outer row lengths do not form a partition".into(),
        })?;
        if cells.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau { reason: "empty outer row".into() });
        }
        let inner_shape = cells
            .first()
            .map(|r| r[0].shape().clone())
            .unwrap_or_else(Partition::empty);
        for (r, row) in cells.iter().enumerate() {
            for (c, t) in row.iter().enumerate() {
                if t.shape() != &inner_shape {
                    return Err(Error::InvalidTableau {
                        reason: format!(
                            "cell ({r},{c}) has inner shape {} instead of {inner_shape}",
                            t.shape()
                        ),
                    });
                }
                if c > 0 && row[c - 1].compare(t)? == Ordering::Greater {
                    return Err(Error::InvalidTableau {
                        reason: format!("outer row {r} decreases at column {c}"),
                    });
                }
                if r > 0 && cells[r - 1][c].compare(t)? != Ordering::Less {
                    return Err(Error::InvalidTableau {
                        reason: format!("outer column {c} does not strictly increase at row {r}"),
                    });
                }
            }
        }
        Ok(PlethysticTableau { outer_shape, inner_shape, cells })
    }

    /// ν, the shape being filled.
    pub fn outer_shape(&self) -> &Partition {
        &self.outer_shape
    }

    /// μ, the common shape of the cell entries.
    pub fn inner_shape(&self) -> &Partition {
        &self.inner_shape
    }

    pub fn cells(&self) -> &[Vec<SemistandardTableau>] {
        &self.cells
    }

    pub fn cell(&self, row: usize, col: usize) -> &SemistandardTableau {
        &self.cells[row][col]
    }

    /// Total weight: component k−1 counts occurrences of k across all cells.
    pub fn weight(&self) -> Composition {
        let max = self
            .cells
            .iter()
            .flatten()
            .map(|t| t.max_entry())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u64; max as usize];
        for t in self.cells.iter().flatten() {
            for row in t.rows() {
                for &e in row {
                    counts[e as usize - 1] += 1;
                }
            }
        }
        Composition::new(counts)
    }
}

impl TryFrom<Vec<Vec<Vec<Vec<u64>>>>> for PlethysticTableau {
    type Error = Error;
    fn try_from(raw: Vec<Vec<Vec<Vec<u64>>>>) -> Result<Self, Error> {
        let cells = raw
            .into_iter()
            .map(|row| row.into_iter().map(SemistandardTableau::new).collect())
            .collect::<Result<Vec<Vec<_>>, Error>>()?;
        PlethysticTableau::new(cells)
    }
}

impl From<PlethysticTableau> for Vec<Vec<Vec<Vec<u64>>>> {
    fn from(t: PlethysticTableau) -> Vec<Vec<Vec<Vec<u64>>>> {
        t.cells
            .into_iter()
            .map(|row| row.into_iter().map(Vec::<Vec<u64>>::from).collect())
            .collect()
    }
}

/// Cells within an outer row joined by `|`, outer rows by `||`; each cell in
/// the `1,1/2` tableau syntax.
impl fmt::Display for PlethysticTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.cells.iter().enumerate() {
            if r > 0 {
                write!(f, "||")?;
            }
            for (c, t) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, "|")?;
                }
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PlethysticTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlethysticTableau({self})")
    }
}

/// All plethystic semistandard tableaux of shape μ^ν with entries ≤
/// max_entry, in the order induced by SSYT enumeration over the sorted
/// alphabet of inner tableaux.
pub fn enumerate_plethystic(
    mu: &Partition,
    nu: &Partition,
    max_entry: u64,
) -> Vec<PlethysticTableau> {
    let alphabet = enumerate_ssyt(mu, max_entry);
    let index_fillings = enumerate_ssyt(nu, alphabet.len() as u64);
    index_fillings
        .into_iter()
        .map(|idx| PlethysticTableau {
            outer_shape: nu.clone(),
            inner_shape: mu.clone(),
            cells: idx
                .rows()
                .iter()
                .map(|row| row.iter().map(|&e| alphabet[e as usize - 1].clone()).collect())
                .collect(),
        })
        .collect()
}
