//! Execution strategy for the enumeration-heavy kernels.
//!
//! Operations that enumerate many independent terms (interval cuts, table
//! rows, splittings of a composition) fan out over a work list and fold the
//! partial sums into one [`Accumulator`]. Coefficient addition is exact and
//! commutative, so the reduced result does not depend on the strategy.

use crate::free_module::{Accumulator, FreeModuleElement, Torsion};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Sums `f(item)` over `items` into a reduced element.
pub(crate) fn sum_terms<T, K, F>(items: &[T], torsion: Torsion, strategy: Strategy, f: F) -> FreeModuleElement<K>
where
    T: Sync,
    K: Ord + Clone + Send,
    F: Fn(&T, &mut Accumulator<K>) + Sync,
{
    match strategy {
        Strategy::Sequential => {
            let mut acc = Accumulator::new(torsion);
            for item in items {
                f(item, &mut acc);
            }
            acc.finish()
        }
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            items
                .par_iter()
                .fold(
                    || Accumulator::new(torsion),
                    |mut acc, item| {
                        f(item, &mut acc);
                        acc
                    },
                )
                .reduce(
                    || Accumulator::new(torsion),
                    |mut a, b| {
                        a.merge(b);
                        a
                    },
                )
                .finish()
        }
    }
}
