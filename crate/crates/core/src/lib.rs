//! Rate regions of the n-user Gaussian interference channel when every
//! receiver treats interference as noise.
//!
//! * [`channel`]: gain matrices, SINR and per-user rates.
//! * [`frontier2`]: closed-form two-user power-control frontiers, their
//!   convexity classes and the TDM optimality test.
//! * [`crystallize`]: on/off corner points and the time-sharing hull over them.
//! * [`nregion`]: n-user potential surfaces and the symmetric n-user threshold.
//! * [`oracle`]: brute-force grid checks and area / rate-gap metrics.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
// NaN must fail the range checks, so `!(x > 0.0)` is deliberate
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod channel;
pub mod crystallize;
pub mod error;
pub mod frontier2;
mod linalg;
mod math;
pub mod nregion;
pub mod oracle;

pub use channel::{
    db_to_linear, normalize_two_user, rate_vector, sinr, ChannelInstance, PowerVector, RatePoint,
    TwoUserParams,
};
pub use error::{Error, Result};
