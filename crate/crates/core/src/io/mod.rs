//! File formats, the example gallery, named check suites and certificates.

mod build;
mod certificate;
mod format;
mod gallery;
mod suite;

pub use build::{build, cotensor, BuildOptions, BuildSpec, CotensorReport, Files, BUILDS};
pub use certificate::{
    Certificate, CertifiedCheck, CertifiedWitness, InputDigest, Verdict, CERTIFICATE_SCHEMA,
};
pub use format::{
    declared_field, from_json, parse_action, parse_algebra, parse_cayley, parse_coaction,
    parse_dmap, parse_tensor, to_json, ActionFile, AlgebraFile, CayleyFile, MapFile, TensorFile,
};
pub use gallery::{gallery, GalleryEntry, Manifest, GALLERY, MANIFEST};
pub use suite::{run_suite, suite_spec, Inputs, SuiteOptions, SuiteSpec, FULL_BASIS_LIMIT, SUITES};

#[cfg(test)]
mod tests;
