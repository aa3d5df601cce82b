//! Desk-scale counterfactual explanations for image classifiers.
//!
//! The crate trains an explainer network to produce saliency maps for a
//! frozen classifier by optimizing a masking objective: the input is blended
//! toward a learned scalar wherever the map is low, and the loss rewards maps
//! that keep the classifier's prediction intact while staying sparse. Maps
//! are evaluated with perturbation AUC metrics (progressive blackout of
//! pixels in map order).
//!
//! Everything is self-contained: a reverse-mode autodiff tape over dense f64
//! tensors, two small classifier families, the explainer heads, the training
//! loops, the metrics, a deterministic synthetic corpus, and binary file
//! formats for datasets and checkpoints.

pub mod config;
pub mod data;
pub mod error;
pub mod io;
pub mod map;
pub mod metrics;
pub mod models;
pub mod objective;
pub mod optim;
pub mod tape;
pub mod tensor;
pub mod training;

pub use error::{Error, Result};
