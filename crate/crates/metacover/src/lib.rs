//! Certificates, file formats and the command-line driver on top of
//! [`metacover_core`].

pub mod certificate;
pub mod pipeline;
pub mod render;
pub mod serial;

pub use certificate::{Block, Certificate, Payload, Status, SCHEMA_VERSION};
