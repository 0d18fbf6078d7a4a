use std::path::PathBuf;

use clap::ValueEnum;
use likeiper::xifactory::cache::CACHE_ENV;
use likeiper::{Error, Result};

/// Smallest precision accepted by any command.
pub const MIN_DIGITS: u32 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Text => "text",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub digits: u32,
    pub order: usize,
    pub max_n: usize,
    pub format: Format,
    /// `None` disables the on-disk cache.
    pub cache_path: Option<PathBuf>,
}

impl RunConfig {
    /// Checks the invariants shared by every command.
    pub fn validate(&self) -> Result<()> {
        if self.digits < MIN_DIGITS {
            return Err(Error::Precision {
                what: "--digits".into(),
                required: MIN_DIGITS,
                available: self.digits,
            });
        }
        if self.order == 0 {
            return Err(Error::Usage("--order must be at least 1".into()));
        }
        Ok(())
    }

    /// Additional checks for commands that tabulate the xi series: `max_n`
    /// within the order, and enough digits for the verification tolerances
    /// (down to 1e-40) to survive the loss of about `order log10 2` digits
    /// in the lambda recurrence.
    pub fn validate_series(&self) -> Result<()> {
        self.validate()?;
        if self.max_n == 0 || self.max_n > self.order {
            return Err(Error::Usage(format!(
                "--max-n must satisfy 1 <= max-n <= order ({}), got {}",
                self.order, self.max_n
            )));
        }
        let required = series_digits_required(self.order);
        if self.digits < required {
            return Err(Error::Precision {
                what: format!("digits >= 40 + ceil(order * log10 2) for order {}", self.order),
                required,
                available: self.digits,
            });
        }
        Ok(())
    }

    /// Significant digits printed for every numeric value.
    pub fn sig_digits(&self) -> usize {
        (self.digits.saturating_sub(10)).min(30) as usize
    }
}

pub fn series_digits_required(order: usize) -> u32 {
    40 + (order as f64 * std::f64::consts::LOG10_2).ceil() as u32
}

/// Flag, then environment, then the per-user data directory.
pub fn resolve_cache_path(flag: Option<PathBuf>, no_cache: bool) -> Option<PathBuf> {
    if no_cache {
        return None;
    }
    flag.or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
        .or_else(|| dirs::data_dir().map(|d| d.join("likeiper").join("constants.txt")))
}
