//! Independent numerical checks of the closed form: a shooting eigensolver
//! for the boundary value problem and a quadrature for `pi_p`.

pub mod ode;
pub mod quadrature;
pub mod shooting;

pub use quadrature::{pi_p_closed_form, pi_p_quadrature};
pub use shooting::{
    eigenvalue_shooting, eigenvalue_shooting_on, phi, shoot, shoot_residual, ShootingResult, Shot,
};
