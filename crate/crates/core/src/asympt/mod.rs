//! Singularity analysis of rational generating functions and the statistics
//! used to watch distributions approach normality.

pub mod roots;
pub mod singular;
pub mod stats;

pub use roots::{big_ln, format_decimal, RealRoot};
pub use singular::{dominant_root, mean_variance_at, Numeric, SingularityReport};
pub use stats::{dist_stats, ks_to_normal, local_limit_estimate, normality_report, report_tsv, tv_distance, DistStats, LocalLimit, NormalityRow, SeriesSource};
