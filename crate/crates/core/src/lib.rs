pub mod diagram;
pub mod error;
pub mod family;
pub mod flag;
pub mod groups;
pub mod poly;
pub mod series;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use family::Family;
pub use flag::{FlagPolynomial, Subset};
pub use poly::{GammaVector, Polynomial};
pub use series::{SeriesName, TruncatedSeries};
