//! Shared test-only helpers: scripted uniform sources and quadrature oracles.

use crate::samplers::UnitSource;

/// Replays a fixed sequence of "uniform" values. Unlike a real stream it may
/// yield 0.0 or values outside (0, 1); tests use that to pin edge behavior.
pub struct ScriptedStream {
    values: Vec<f64>,
    pos: usize,
}

impl ScriptedStream {
    pub fn new(values: &[f64]) -> Self {
        ScriptedStream {
            values: values.to_vec(),
            pos: 0,
        }
    }
}

impl UnitSource for ScriptedStream {
    fn next_unit(&mut self) -> f64 {
        let v = self.values[self.pos % self.values.len()];
        self.pos += 1;
        v
    }
}

/// Composite Simpson quadrature with `panels` panels (rounded up to even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = if panels.is_multiple_of(2) {
        panels
    } else {
        panels + 1
    };
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_is_exact_for_cubics() {
        let got = simpson(|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 10);
        // ∫₀² (x³ − 2x + 1) dx = 4 − 4 + 2 = 2
        assert!((got - 2.0).abs() < 1e-13);
    }

    #[test]
    fn scripted_stream_replays() {
        let mut s = ScriptedStream::new(&[0.25, 0.75]);
        assert_eq!(s.next_unit(), 0.25);
        assert_eq!(s.next_unit(), 0.75);
        assert_eq!(s.next_unit(), 0.25);
    }
}
