//! Buchberger Groebner bases over field coefficients, ideal membership and
//! equality, elimination support, and Hilbert series of graded quotients.

pub mod buchberger;
pub mod hilbert;
pub mod order;
pub mod series;

pub use buchberger::{
    buchberger, buchberger_with_budget, ideal_equal, ideal_equal_with_budget, Budget,
    GroebnerBasis,
};
pub use hilbert::{hilbert_series, hilbert_series_with};
pub use order::MonomialOrder;
pub use series::GradedSeries;
