//! Grid export: CSV sampling of one function over a rectangle, with an
//! optional domain-coloring PPM (hue = argument, lightness = |v|/(1+|v|)).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use sextic::{Complex64, ExtComplex, System};

use crate::{eval_function, Failure, Function};

#[derive(Debug, Clone, Copy)]
struct Axis {
    min: f64,
    max: f64,
    count: usize,
}

impl Axis {
    fn parse(text: &str, name: &str) -> Result<Axis, Failure> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(Failure::usage(format!(
                "--{name} expects \"min:max:count\", got \"{text}\""
            )));
        }
        let min: f64 = parts[0]
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad {name} minimum \"{}\"", parts[0])))?;
        let max: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad {name} maximum \"{}\"", parts[1])))?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad {name} count \"{}\"", parts[2])))?;
        if count < 2 {
            return Err(Failure::usage(format!("--{name} count must be >= 2")));
        }
        let ordered = max > min;
        if !ordered {
            return Err(Failure::usage(format!("--{name} needs max > min")));
        }
        Ok(Axis { min, max, count })
    }

    fn value(&self, index: usize) -> f64 {
        self.min + (self.max - self.min) * index as f64 / (self.count - 1) as f64
    }
}

/// One grid sample: a value, a pole, or a point the evaluator refuses
/// (outside the band, path near a vertex).
#[derive(Debug, Clone, Copy)]
enum Sample {
    Finite(Complex64),
    Pole,
    Undefined,
}

pub fn cmd_grid(
    function: Function,
    re_text: &str,
    im_text: &str,
    out: &Path,
    ppm: Option<&Path>,
) -> Result<u8, Failure> {
    let re_axis = Axis::parse(re_text, "re")?;
    let im_axis = Axis::parse(im_text, "im")?;
    let system = System::new()?;

    // Row-major: imaginary axis outer, real axis inner. Points are
    // independent, so evaluate them in parallel and keep the ordering.
    let total = re_axis.count * im_axis.count;
    let samples: Vec<Sample> = (0..total)
        .into_par_iter()
        .map(|index| {
            let re = re_axis.value(index % re_axis.count);
            let im = im_axis.value(index / re_axis.count);
            match eval_function(&system, function, Complex64::new(re, im)) {
                Ok(ExtComplex::Finite(v)) => Sample::Finite(v),
                Ok(ExtComplex::Infinity) => Sample::Pole,
                Err(_) => Sample::Undefined,
            }
        })
        .collect();

    write_csv(out, &re_axis, &im_axis, &samples)
        .map_err(|e| Failure::io(format!("{}: {e}", out.display())))?;
    if let Some(path) = ppm {
        write_ppm(path, &re_axis, &im_axis, &samples)
            .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}

fn write_csv(
    path: &Path,
    re_axis: &Axis,
    im_axis: &Axis,
    samples: &[Sample],
) -> std::io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    writeln!(out, "re,im,val_re,val_im")?;
    for (index, sample) in samples.iter().enumerate() {
        let re = re_axis.value(index % re_axis.count);
        let im = im_axis.value(index / re_axis.count);
        match sample {
            Sample::Finite(v) => writeln!(out, "{re},{im},{},{}", v.re + 0.0, v.im + 0.0)?,
            Sample::Pole => writeln!(out, "{re},{im},inf,inf")?,
            Sample::Undefined => writeln!(out, "{re},{im},nan,nan")?,
        }
    }
    out.flush()
}

fn write_ppm(
    path: &Path,
    re_axis: &Axis,
    im_axis: &Axis,
    samples: &[Sample],
) -> std::io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write!(out, "P6\n{} {}\n255\n", re_axis.count, im_axis.count)?;
    let mut row = Vec::with_capacity(3 * re_axis.count);
    for chunk in samples.chunks(re_axis.count) {
        row.clear();
        for sample in chunk {
            let (r, g, b) = pixel(*sample);
            row.extend_from_slice(&[r, g, b]);
        }
        out.write_all(&row)?;
    }
    out.flush()
}

fn pixel(sample: Sample) -> (u8, u8, u8) {
    match sample {
        // Poles render at maximum lightness, undefined points black.
        Sample::Pole => (255, 255, 255),
        Sample::Undefined => (0, 0, 0),
        Sample::Finite(v) => {
            let hue = (v.arg() / std::f64::consts::TAU).rem_euclid(1.0);
            let modulus = v.norm();
            let lightness = modulus / (1.0 + modulus);
            hsl_to_rgb(hue, 1.0, lightness)
        }
    }
}

fn hsl_to_rgb(h: f64, s: f64, l: f64) -> (u8, u8, u8) {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = h * 6.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let to_byte = |v: f64| ((v + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    (to_byte(r), to_byte(g), to_byte(b))
}
