pub mod coalgebra;
pub mod cohom;
pub mod comodule;
pub mod cotensor;
pub mod error;
pub mod fixtures;
pub mod hom;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod morita;
pub mod normal_form;
pub mod purity;
pub mod ring;
