//! Arithmetic of the counts behind existence: partitions and `a(n)`, the
//! friendly-prime semigroup, `HSD(x)`, prime densities, distinct values of
//! `a(n)` and the extremal family for the maximal order of `a(n)`.

mod density;
mod maxorder;
mod partition;
mod report;
mod sieve;
mod sums;

pub use density::{density_delta, friendly_density, li, ratio_to_f64};
pub use maxorder::{kratzel_limit, max_order_suite, MaxOrderReport, MaxOrderRow, MAX_ORDER_LIMIT};
pub use partition::{
    abelian_count, partition_count, partition_table, semigroup_member, PARTITION_LIMIT,
};
pub use report::{fmt12, round12, write_csv, CountingReport};
pub use sieve::{SieveContext, SIEVE_LIMIT};
pub use sums::{
    abelian_sum, abelian_sum_main_term, distinct_bound, distinct_values, hsd_count, hsd_direct,
    hsd_fit, hsd_sieve, pq_count, FitReport, FitSample, C1, C2, C3, DIRECT_CHECK_LIMIT,
    DISTINCT_LIMIT,
};
