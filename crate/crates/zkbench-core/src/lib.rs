#![no_std]
extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod algebra;
pub mod commit;
pub mod pairing;
pub mod snark;
pub mod stark;
pub mod wire;
