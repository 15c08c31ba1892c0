pub mod norm;
