use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Lower,
    Upper,
}

/// A finite block of a (possibly infinite) triangular matrix.
///
/// Entries off the declared triangle are never stored as anything but zero, so
/// a formula that would pole there is simply not evaluated.
#[derive(Clone, PartialEq, Eq)]
pub struct TriangularMatrix<F> {
    size: usize,
    orientation: Orientation,
    entries: Vec<Vec<F>>,
}

impl<F: ExactScalar> TriangularMatrix<F> {
    fn in_triangle(orientation: Orientation, i: usize, j: usize) -> bool {
        match orientation {
            Orientation::Lower => j <= i,
            Orientation::Upper => i <= j,
        }
    }

    /// Fill the triangle from `entry(i, j)`.
    pub fn from_fn(
        size: usize,
        orientation: Orientation,
        mut entry: impl FnMut(usize, usize) -> Result<F>,
    ) -> Result<Self> {
        let mut entries = vec![vec![F::zero(); size]; size];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if Self::in_triangle(orientation, i, j) {
                    *x = entry(i, j)?;
                }
            }
        }
        Ok(TriangularMatrix { size, orientation, entries })
    }

    pub fn identity(size: usize, orientation: Orientation) -> Self {
        Self::from_fn(size, orientation, |i, j| Ok(if i == j { F::one() } else { F::zero() }))
            .expect("identity has no poles")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn transpose(&self) -> Self {
        let orientation = match self.orientation {
            Orientation::Lower => Orientation::Upper,
            Orientation::Upper => Orientation::Lower,
        };
        Self::from_fn(self.size, orientation, |i, j| Ok(self.entries[j][i].clone())).expect("no poles")
    }

    /// Product of two blocks of equal size and orientation; only the
    /// triangular range of the inner index is summed.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.size != rhs.size || self.orientation != rhs.orientation {
            return Err(Error::Domain("matrix shapes differ".into()));
        }
        Self::from_fn(self.size, self.orientation, |i, j| {
            let (lo, hi) = match self.orientation {
                Orientation::Lower => (j, i),
                Orientation::Upper => (i, j),
            };
            let mut acc = F::zero();
            for k in lo..=hi {
                acc = acc + &(self.entries[i][k].clone() * &rhs.entries[k][j]);
            }
            Ok(acc)
        })
    }

    /// `d_i M_{ij} / d_j`.
    pub fn conjugate(&self, d: &[F]) -> Result<Self> {
        Self::from_fn(self.size, self.orientation, |i, j| {
            (self.entries[i][j].clone() * &d[i]).checked_div(&d[j])
        })
    }

    /// Rows as lists of wire strings.
    pub fn to_wire(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(|x| x.to_wire()).collect()).collect()
    }
}

impl<F: ExactScalar> fmt::Debug for TriangularMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.orientation, self.size, self.size)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
