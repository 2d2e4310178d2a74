//! Countable constructions studied through finite truncation windows.

pub mod demos;
pub mod family;
pub mod ladder;

pub use demos::{demo_growth_chain, demo_window, Demo, GrowthChain};
pub use family::{finitarize, make_mk, nearly_finitary_gap, Component, Copies, Gap, GapReport, Kind, SymbolicFamily};
pub use ladder::ladder_demo;
