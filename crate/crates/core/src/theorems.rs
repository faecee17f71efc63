//! Classification, certification, grid scans and cross-checks. (In progress.)
