pub mod dot;
pub mod slice_text;
pub mod substfile;
pub mod tables;

pub use substfile::SubstitutionFile;
