//! Exact integer sequences, truncated power series, closed-form counts and
//! the desk-scale caps for brute-force oracles.

mod catalog;
mod families;
mod series;
mod special;
mod table;
mod weighted;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use catalog::{closed_counts, closed_form, Family, Table1Row, Table2Row, TABLE1, TABLE2};
pub use families::{
    bell, binomial, binomial_transform, catalan, dudu_count, factorial, fibonacci, fubini,
    modasc_221, motzkin, named_sequence, power_sum_122, prim_122, stirling2, stirling2_rows,
    NamedSequence,
};
pub use series::IntSeries;
pub use special::{
    binomial_transform_count, d_series, f_alternating_form, f_product_form, f_series, g_series,
    modasc_1232_series, modasc_122_series, motzkin_series, ogf_substitute, special_series,
    SpecialSeries,
};
pub use table::{oracle_table, CountTable, Provenance};
pub use weighted::{
    active_sites_221, ascent_distribution, modasc_221_by_active_sites, p_coefficients, p_table,
    rlmin_distribution_32_1, stirling_identity_check, stirling_identity_sides,
    wrlmin_distribution_prim_221, WeightedCounts,
};

/// Environment variable overriding the default caps.
pub const CAP_ENV: &str = "FP_CAP";

/// Largest sizes the brute-force oracles accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Enumeration of modified ascent and primitive sequences.
    pub oracle: usize,
    /// Dyck paths and set partitions.
    pub paths: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            oracle: 10,
            paths: 12,
        }
    }
}

impl Caps {
    /// Both caps set to one value.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            oracle: cap,
            paths: cap,
        }
    }

    /// Defaults, or [`Caps::uniform`] with the value of `FP_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(v) => v.trim().parse().map(Caps::uniform).map_err(|e| Error::Parse {
                what: "cap",
                input: v.clone(),
                reason: format!("{e}"),
            }),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub fn check_oracle(&self, n: usize) -> Result<()> {
        check(n, self.oracle)
    }

    pub fn check_paths(&self, n: usize) -> Result<()> {
        check(n, self.paths)
    }
}

fn check(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}
