//! Closed-form free-fermion results for XX and XY chains.

pub mod energies;
pub mod levels;
pub mod modes;
pub mod partition;
pub mod thermal;

pub use energies::{
    ground_energy, ground_energy_open, ground_energy_periodic, hcrit, hcrit_from_levels,
};
pub use levels::{
    xx_levels_open, xx_levels_periodic, xx_lowest_levels, xy_levels_periodic, Level, LevelSet,
};
pub use modes::{xy_mode_data, ModeData};
pub use partition::{log_partition, partition_open, partition_periodic};
pub use thermal::{
    free_energy_density_asymptotic, free_energy_density_limit, thermal_concurrence,
    threshold_temperature, threshold_temperature_asymptotic,
};
