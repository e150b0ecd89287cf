//! Monomial ideals through the lens of multicomplexes: irreducible
//! decompositions and facets, depth from Betti numbers, Hilbert series,
//! interval partitions, Stanley depth search and polarization.

pub mod depth;
pub mod error;
pub mod hilbert;
pub mod homology;
pub mod model;
pub mod multicomplex;
pub mod partitions;
pub mod polarization;
pub mod sdepth;

pub use depth::{betti_total, depth_report, DepthReport};
pub use error::{Error, Result};
pub use hilbert::{hilbert_series, interval_series, series_equal, RationalSeries};
pub use homology::Field;
pub use model::{ExtNat, Face, Interval, Monomial, MonomialIdeal, RingContext};
pub use multicomplex::{facets, irreducible_decomposition, maximal_faces, MulticomplexView};
pub use partitions::{classify, verify, Partition, VerificationReport};
pub use polarization::{polarize_ideal, polarize_partition, transfer, PolarizationMap, Transfer};
pub use sdepth::{nice_partition, solve_sdepth, SolverOptions, SolverResult};
