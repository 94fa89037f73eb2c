// Shared numeric types, errors and small exact linear algebra helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wof {

using Rational = boost::multiprecision::cpp_rational;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long long>;
using IMat = std::vector<std::vector<int>>;
using RVec = std::vector<double>;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Bad input for a well-formed request (wrong rank, wall weight, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NearSingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonInvertiblePlanError : public DomainError {
 public:
  using DomainError::DomainError;
};

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const QVec& v, char sep = ',');

// Accepts "p/q", integers and finite decimals ("0.125"), all exact.
Rational parse_rational(std::string_view s);
QVec parse_qvec(std::string_view csv);
RVec parse_rvec(std::string_view csv);

double to_double(const Rational& q);
RVec to_double(const QVec& v);
QVec to_rational(const IVec& v);

bool is_integer(const Rational& q);
bool is_zero(const QVec& v);

QMat inverse(const QMat& a);
QMat to_qmat(const IMat& a);
QMat matmul(const QMat& a, const QMat& b);
QMat transpose(const QMat& a);
// a·v (column) and v·a (row).
QVec mul(const QMat& a, const QVec& v);
QVec mul_row(const QVec& v, const QMat& a);
QVec mul(const IMat& a, const QVec& v);
RVec mul(const IMat& a, const RVec& v);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& c, const QVec& a);

Rational dot(const QVec& a, const QVec& b);
double dot(const RVec& a, const RVec& b);

// Determinant of a small complex / real matrix by partial pivoting.
Complex det(std::vector<std::vector<Complex>> a);
double det(std::vector<std::vector<double>> a);
// Permanent by Ryser's formula; n is at most ~10 here.
Complex permanent(const std::vector<std::vector<Complex>>& a);
double permanent(const std::vector<std::vector<double>>& a);

std::uint64_t factorial(int n);

}  // namespace wof
