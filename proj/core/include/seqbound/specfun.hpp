#pragma once

namespace seqbound::specfun {

// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

// Entire cosine integral Cin(x) = int_0^x (1 - cos t)/t dt.
double cin(double x);

double erf(double x);

// sin(t)/t with the removable singularity filled in.
double sinc(double t);

// d/dt [sin(t)/t].
double sinc_derivative(double t);

} // namespace seqbound::specfun
