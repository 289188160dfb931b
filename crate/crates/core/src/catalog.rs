//! Fixed algebras that are known only through their graded dimensions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogEntry {
    /// Free algebra on two degree-one generators: `dim A_n = 2^n`.
    FreeAlgebra2,
    /// Enveloping algebra of the Lie algebra with basis `x, y_1, y_2, ...`
    /// and `[x, y_i] = y_{i+1}`, graded with `deg x = deg y_1 = 1`, so
    /// `deg y_i = i`. Its growth is `exp(sqrt n)`: intermediate.
    SmithLie,
}

impl CatalogEntry {
    pub const ALL: [CatalogEntry; 2] = [CatalogEntry::FreeAlgebra2, CatalogEntry::SmithLie];

    pub fn id(self) -> &'static str {
        match self {
            CatalogEntry::FreeAlgebra2 => "free_algebra_2",
            CatalogEntry::SmithLie => "smith_lie",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.id() == id)
    }

    /// Graded piece dimensions `dim A_0, ..., dim A_max`.
    pub fn graded_dims(self, max: usize) -> Vec<BigUint> {
        match self {
            CatalogEntry::FreeAlgebra2 => (0..=max).map(|n| BigUint::one() << n).collect(),
            CatalogEntry::SmithLie => {
                // PBW basis: x^a * y_{i1} ... y_{ik}; Hilbert series
                // 1/(1-t) * prod_{i>=1} 1/(1-t^i).
                let mut ways = vec![BigUint::zero(); max + 1];
                ways[0] = BigUint::one();
                for part in 1..=max {
                    for n in part..=max {
                        let add = ways[n - part].clone();
                        ways[n] += add;
                    }
                }
                // the extra factor for x
                let mut acc = BigUint::zero();
                ways.into_iter()
                    .map(|w| {
                        acc += w;
                        acc.clone()
                    })
                    .collect()
            }
        }
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}
