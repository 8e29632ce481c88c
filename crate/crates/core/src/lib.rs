pub mod scalars;
pub mod laurent;
pub mod qdo;
pub mod report;
pub mod daha;
pub mod macdonald;
pub mod toroidal;
pub mod ncverify;
pub mod suites;
