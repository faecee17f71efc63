//! Composite verification suites. (In progress.)
