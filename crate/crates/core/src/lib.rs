pub mod cli;
pub mod equidist;
pub mod genlin;
pub mod gf2;
pub mod lcg;
pub mod stats;
pub mod stream;

mod factor_table;
