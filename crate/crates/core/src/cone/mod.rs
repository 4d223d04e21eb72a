//! Regular Reeb fields in w-Sasaki cones, and the `Y^{p,q}` dictionary.

mod regular;
mod ypq;

pub use regular::{
    enumerate_regular_cones, has_regular_reeb, regular_cones_by_scan, RegularConeEntry, Regularity,
    DEFAULT_SCAN_SUM,
};
pub use ypq::{ypq_translate, ExactRational, YpqData};
