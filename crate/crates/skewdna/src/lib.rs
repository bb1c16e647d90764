//! IO, parallel drivers, file formats, the code store and the table
//! verification harness around `skewdna-core`.

pub mod analysis;
pub mod fixtures;
pub mod formats;
pub mod parallel;
pub mod store;
pub mod verify;
