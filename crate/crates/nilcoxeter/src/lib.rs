pub mod coxeter;
pub mod nilcox;
pub mod zring;
pub mod linalg;
pub mod resolution;
pub mod relations;
pub mod extengine;
pub mod pirep;
pub mod koszul;
