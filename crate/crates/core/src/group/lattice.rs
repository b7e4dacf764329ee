use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{integer_kernel, IntMatrix};

/// A finite group acting on the character lattice `M = Z^rank`, given by
/// unimodular generators. The trivial group is the list `[identity]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeAutGroup {
    rank: usize,
    generators: Vec<IntMatrix>,
}

impl LatticeAutGroup {
    pub fn new(rank: usize, generators: Vec<IntMatrix>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input(
                "lattice group needs at least one generator (use the identity for the trivial group)".into(),
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != rank || g.cols() != rank {
                return Err(Error::Input(format!(
                    "lattice generator {i} is {}x{}, expected {rank}x{rank}",
                    g.rows(),
                    g.cols()
                )));
            }
            if !g.is_unimodular() {
                return Err(Error::Input(format!("lattice generator {i} = {g} is not unimodular (det = {})", g.det())));
            }
        }
        Ok(LatticeAutGroup { rank, generators })
    }

    pub fn trivial(rank: usize) -> Self {
        LatticeAutGroup { rank, generators: vec![IntMatrix::identity(rank)] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }
}

/// Saturated basis of `{u : g u = u for every generator g}`. Empty means only 0 is fixed.
pub fn fixed_sublattice(group: &LatticeAutGroup) -> Vec<Vec<BigInt>> {
    let id = IntMatrix::identity(group.rank);
    let stacked =
        group.generators.iter().map(|g| g.sub(&id)).reduce(|acc, m| acc.vstack(&m)).expect("at least one generator");
    integer_kernel(&stacked)
}

/// The action is symmetric when no nonzero character is fixed.
pub fn is_symmetric(group: &LatticeAutGroup) -> bool {
    fixed_sublattice(group).is_empty()
}
