//! Desk-scale two-pass speech-to-speech translation.
//!
//! The pipeline translates source-language audio into target-language audio in
//! two passes. The first pass runs a transformer speech encoder and a small
//! feed-forward adapter that projects acoustic features into the embedding
//! space of a decoder-only text model, which produces the target transcript.
//! The second pass maps the transcript to discrete speech tokens with an
//! autoregressive token model, groups the tokens into fixed-size chunks, and
//! renders each chunk to mel frames with a causal conditional-flow-matching
//! model before Griffin-Lim vocoding — so audio streams out while tokens are
//! still being generated.
//!
//! Everything trains from scratch in f64 on a single CPU core, deterministic
//! down to the checkpoint bytes. The `harness` module owns corpus ingestion,
//! the synthetic desk corpus, training loops, and checkpointing; `metrics`
//! owns BLEU / ASR-BLEU / similarity scoring.

pub mod audio;
pub mod codec;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod nn;
pub mod s2tt;
pub mod synth;
pub mod text;
pub mod tts;

pub use error::{Error, Result};
