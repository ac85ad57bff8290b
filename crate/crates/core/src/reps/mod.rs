//! Concrete representations.
