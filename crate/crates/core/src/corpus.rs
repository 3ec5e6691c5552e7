//! The fourteen kernel polynomials, shipped as text.

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::parse::{parse_definitions, DefinitionSet, ParseError};
use crate::poly::RingSignature;

/// `~q1` … `~q14` in `.poly` syntax over the E-form ring.
pub const APPENDIX_TEXT: &str = include_str!("../data/appendix.poly");

/// SHA-256 of [`APPENDIX_TEXT`].
pub const APPENDIX_SHA256: &str =
    "97a55ff4b89622ee0b283d0b38a2914c40cf0979a6b1fc8d3b766735f48bb0c1";

pub const KERNEL_SIZE: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("corpus checksum mismatch: expected {expected}, found {found}")]
    ChecksumMismatch { expected: String, found: String },
    #[error("corpus parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("corpus holds {found} definitions, expected {expected}")]
    WrongCount { expected: usize, found: usize },
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn check_integrity(text: &str, expected: &str) -> Result<(), CorpusError> {
    let found = sha256_hex(text);
    if found.eq_ignore_ascii_case(expected) {
        Ok(())
    } else {
        Err(CorpusError::ChecksumMismatch {
            expected: expected.to_string(),
            found,
        })
    }
}

/// Parses a kernel corpus, optionally guarded by a checksum, and insists on
/// exactly fourteen entries.
pub fn load_kernel(
    text: &str,
    expected_sha256: Option<&str>,
) -> Result<DefinitionSet, CorpusError> {
    if let Some(sum) = expected_sha256 {
        check_integrity(text, sum)?;
    }
    let defs = parse_definitions(text, &RingSignature::el())?;
    if defs.len() != KERNEL_SIZE {
        return Err(CorpusError::WrongCount {
            expected: KERNEL_SIZE,
            found: defs.len(),
        });
    }
    Ok(defs)
}

/// The embedded corpus, checksum-verified.
pub fn embedded_kernel() -> Result<DefinitionSet, CorpusError> {
    load_kernel(APPENDIX_TEXT, Some(APPENDIX_SHA256))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_corpus_is_intact() {
        let defs = embedded_kernel().unwrap();
        let names: Vec<_> = defs.names().collect();
        let expected: Vec<String> = (1..=14).map(|i| format!("~q{i}")).collect();
        assert_eq!(names, expected);
    }

    #[test]
    fn tampering_is_detected() {
        let tampered = APPENDIX_TEXT.replacen("-3*E02*E21", "-4*E02*E21", 1);
        assert!(matches!(
            load_kernel(&tampered, Some(APPENDIX_SHA256)),
            Err(CorpusError::ChecksumMismatch { .. })
        ));
        // unchecked loading still parses
        assert_eq!(load_kernel(&tampered, None).unwrap().len(), 14);
    }

    #[test]
    fn wrong_count() {
        assert!(matches!(
            load_kernel("a:=E10;", None),
            Err(CorpusError::WrongCount { found: 1, .. })
        ));
    }
}
