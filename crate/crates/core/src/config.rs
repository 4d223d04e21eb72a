use crate::error::{Error, Result};
use crate::report::OutputFormat;

/// Environment variable holding the default shard count for searches.
pub const SHARDS_ENV: &str = "SEJOIN_SHARDS";

/// Bounds and output settings shared by the CLI commands. Every run is
/// deterministic; there is no seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub max_w: u64,
    pub max_sum: u64,
    pub shard_count: usize,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            max_w: 10_000,
            max_sum: 1_000,
            shard_count: default_shards(),
            output_format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_w == 0 {
            return Err(Error::Zero("max_W"));
        }
        if self.max_sum == 0 {
            return Err(Error::Zero("max_sum"));
        }
        if self.shard_count == 0 {
            return Err(Error::Zero("shard count"));
        }
        Ok(())
    }
}

/// Available parallelism, or 1 if it cannot be queried.
pub fn default_shards() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
