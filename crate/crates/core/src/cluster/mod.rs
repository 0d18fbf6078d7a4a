//! Li-Keiper coefficients from xi Taylor data: the `phi_n`, conversions to
//! and from `lambda_n`, equilibrium equations, cluster bounds and the
//! partition machinery behind them.

mod bounds;
mod equilibrium;
mod expansion;
mod partition;
mod record;

pub use bounds::{bell_phi, bounds, rwb_lower, rwb_sequence, MAX_BELL};
pub use equilibrium::{delta_epsilon, equilibrium_lhs, equilibrium_residual, EquilibriumSides};
pub use expansion::{
    cluster_terms, cluster_weight, lambda_by_partitions, lambda_from_phi, lambda_sequence,
    phi_from_lambda, phi_from_xi, phi_sequence, weight_sum_check, MAX_PARTITION_LAMBDA,
};
pub use partition::{hr_estimate, partition_count, partitions, Partition, MAX_ENUMERATED};
pub use record::{li_records, LiRecord};
