use rand::distr::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Source of uniform integers in `1..=k`.
pub trait UniformSource {
    fn next_int(&mut self, k: usize) -> usize;
}

/// Seeded ChaCha stream. Worker `w` of a batch reads stream `w` of the
/// same seed, so streams never overlap.
#[derive(Clone, Debug)]
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        SeededRng { inner }
    }
}

impl UniformSource for SeededRng {
    fn next_int(&mut self, k: usize) -> usize {
        // Uniform::sample rejects out-of-zone draws, so there is no modulo bias
        let d = Uniform::new_inclusive(1u64, k as u64).expect("k >= 1");
        d.sample(&mut self.inner) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScriptError {
    Exhausted {
        draws: usize,
    },
    OutOfRange {
        draw: usize,
        value: usize,
        bound: usize,
    },
}

impl std::fmt::Display for ScriptError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScriptError::Exhausted { draws } => {
                write!(f, "script exhausted after {draws} draws")
            }
            ScriptError::OutOfRange { draw, value, bound } => {
                write!(f, "draw {draw}: scripted value {value} outside 1..={bound}")
            }
        }
    }
}

/// Replays a fixed list of draws. A draw past the end, or one outside
/// `1..=k`, is recorded as the first error and answered with 1 so the
/// caller can finish and then inspect [`ScriptedRng::error`].
#[derive(Clone, Debug)]
pub struct ScriptedRng {
    values: Vec<usize>,
    pos: usize,
    error: Option<ScriptError>,
}

impl ScriptedRng {
    pub fn new(values: Vec<usize>) -> Self {
        ScriptedRng {
            values,
            pos: 0,
            error: None,
        }
    }

    pub fn error(&self) -> Option<&ScriptError> {
        self.error.as_ref()
    }

    pub fn consumed(&self) -> usize {
        self.pos
    }

    pub fn remaining(&self) -> usize {
        self.values.len().saturating_sub(self.pos)
    }
}

impl UniformSource for ScriptedRng {
    fn next_int(&mut self, k: usize) -> usize {
        let i = self.pos;
        self.pos += 1;
        match self.values.get(i) {
            Some(&v) if (1..=k).contains(&v) => v,
            Some(&v) => {
                self.error.get_or_insert(ScriptError::OutOfRange {
                    draw: i,
                    value: v,
                    bound: k,
                });
                1
            }
            None => {
                self.error
                    .get_or_insert(ScriptError::Exhausted { draws: i });
                1
            }
        }
    }
}
