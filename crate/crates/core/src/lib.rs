pub mod algebra;
pub mod engine;
pub mod resummation;
pub mod numeric;
pub mod fixtures;
pub mod verify;
pub mod report;
