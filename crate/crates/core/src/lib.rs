//! Numerical engine for quantum flows on the two-dimensional parabolic
//! potential barrier (PPB).
//!
//! The crate builds finite superpositions of the PPB eigenbasis (zero-energy
//! and complex-energy corner/diverging/converging flows), evaluates the
//! hydrodynamic velocity field they induce, and locates, classifies, and
//! tracks the quantum vortices sitting at the nodal points of the
//! wavefunction.
//!
//! Everything here is pure computation over `f64`/`Complex64`; the crate is
//! `no_std` (with `alloc`) so the numerics can be embedded anywhere. File
//! formats, CLI, and reporting live in the companion `vortexflow-cli` crate.
//!
//! Module map:
//!
//! * [`wavefield`] — PPB eigenfunctions, complex spectrum, superpositions
//!   with analytic gradients.
//! * [`zeroenergy`] — conformal-map family of zero-energy solutions for the
//!   central potentials `V_a`.
//! * [`hydro`] — density, probability current, quantum velocity, circulation
//!   and winding numbers.
//! * [`vortexscan`] — nodal-point search, Newton refinement, vortex/dipole
//!   classification.
//! * [`patterns`] — the named stable and time-dependent flow presets plus
//!   their analytic vortex loci.
//! * [`tracker`] — time sweeps, track association, lifecycle events.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod hydro;
pub mod patterns;
pub mod tracker;
pub mod vortexscan;
pub mod wavefield;
pub mod zeroenergy;

use num_complex::Complex64;

/// Plain 2D vector in position space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        libm::hypot(self.x - other.x, self.y - other.y)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }

    pub fn add(self, other: Self) -> Self {
        Self::new(self.x + other.x, self.y + other.y)
    }
}

/// Wavefunction value and its analytic spatial gradient at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPoint {
    pub psi: Complex64,
    pub dx: Complex64,
    pub dy: Complex64,
}

/// A complex scalar field with analytic gradients, as consumed by the
/// hydrodynamics and vortex-scan layers.
///
/// The only implementation shipped here is [`wavefield::WaveExpression`];
/// tests use ad-hoc fields (plane waves) through the same interface.
pub trait QuantumField {
    fn field_point(&self, x: f64, y: f64, t: f64) -> FieldPoint;

    fn value(&self, x: f64, y: f64, t: f64) -> Complex64 {
        self.field_point(x, y, t).psi
    }

    fn mass(&self) -> f64;

    fn hbar(&self) -> f64;

    /// Characteristic length used for default contour radii and merge
    /// distances (`1/beta` for PPB fields).
    fn length_scale(&self) -> f64;
}

impl<T: QuantumField + ?Sized> QuantumField for &T {
    fn field_point(&self, x: f64, y: f64, t: f64) -> FieldPoint {
        (**self).field_point(x, y, t)
    }

    fn mass(&self) -> f64 {
        (**self).mass()
    }

    fn hbar(&self) -> f64 {
        (**self).hbar()
    }

    fn length_scale(&self) -> f64 {
        (**self).length_scale()
    }
}
