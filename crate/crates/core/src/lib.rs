pub mod acceptance;
pub mod bundles;
pub mod checks;
pub mod complex;
pub mod convex;
pub mod covers;
pub mod gf2;
pub mod grid;
pub mod lp;
pub mod oracle;
pub mod rational;
pub mod sections;
pub mod tverberg;
