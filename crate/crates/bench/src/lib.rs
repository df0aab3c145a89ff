//! Fixtures shared by the benchmarks.

use nilcent_core::{AlgebraKind, Partition};

/// Partitions used as benchmark inputs, one per algebra kind.
pub fn fixtures() -> Vec<(Partition, AlgebraKind)> {
    vec![
        (Partition::new(vec![4, 2]).unwrap(), AlgebraKind::Gl),
        (Partition::new(vec![3, 2, 2, 1]).unwrap(), AlgebraKind::Gl),
        (Partition::new(vec![4, 2]).unwrap(), AlgebraKind::Sp),
        (Partition::new(vec![3, 3, 1]).unwrap(), AlgebraKind::So),
    ]
}
