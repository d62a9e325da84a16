pub mod join;
pub mod lattice;
pub mod ring;
pub mod site;
pub mod suite;
