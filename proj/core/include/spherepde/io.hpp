#pragma once

// Text formats. Readers skip blank lines and lines starting with '#', and
// throw ParseError on malformed input. Writers use 17 significant digits so
// every double round-trips.
//
//   zonal n=<n> L=<L>            then lines  l re im
//   s2 L=<L>                     then lines  l m re im
//   theta,phi,re,im              CSV grid samples, row-major in theta
//   t,value,method               CSV kernel table
//   cwt family=<f> n=<n> S=<S>   then per scale  scale rho=<r> weight=<w>  and a zonal block
//   helmholtz n=<n> a=<re>,<im> [L=<L>]   then a zonal block

#include "spherepde/s2.hpp"
#include "spherepde/wavelet.hpp"
#include "spherepde/zonal.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spherepde {

void write_zonal(std::ostream& os, const ZonalFunction& f);
/// Degrees absent from the block are zero; repeated degrees are rejected.
ZonalFunction read_zonal(std::istream& is);

void write_s2(std::ostream& os, const SphereSignalS2& f);
SphereSignalS2 read_s2(std::istream& is);

void write_grid(std::ostream& os, const GridS2& g);
/// Rebuilds the geometry; colatitudes must be Gauss-Legendre and longitudes uniform.
GridS2 read_grid(std::istream& is);

struct KernelRow {
  double t = 0.0;
  double value = 0.0;
  std::string method;
};
void write_kernel_csv(std::ostream& os, const std::vector<KernelRow>& rows);
std::vector<KernelRow> read_kernel_csv(std::istream& is);

void write_cwt(std::ostream& os, const WaveletCoefficients& W);
WaveletCoefficients read_cwt(std::istream& is);

struct HelmholtzSpec {
  int n = 2;
  cplx a;
  std::optional<int> L;
  ZonalFunction f;
};
void write_helmholtz(std::ostream& os, const HelmholtzSpec& p);
HelmholtzSpec read_helmholtz(std::istream& is);

/// Strict numeric parsing of a whole token.
double parse_double(const std::string& s);
int parse_int(const std::string& s);

}  // namespace spherepde
