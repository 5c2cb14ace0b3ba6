#pragma once

// Small fixed-size vector/matrix types templated on the scalar so the same
// rigid-body code runs on plain doubles and on SIMD packs.

#include <cmath>

namespace twistbeam {

template <class T>
struct Vec3T {
  T x{}, y{}, z{};

  friend Vec3T operator+(const Vec3T& a, const Vec3T& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3T operator-(const Vec3T& a, const Vec3T& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3T operator-(const Vec3T& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3T operator*(const T& s, const Vec3T& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend Vec3T operator*(const Vec3T& a, const T& s) { return s * a; }
  Vec3T& operator+=(const Vec3T& b) {
    x = x + b.x;
    y = y + b.y;
    z = z + b.z;
    return *this;
  }
  Vec3T& operator-=(const Vec3T& b) {
    x = x - b.x;
    y = y - b.y;
    z = z - b.z;
    return *this;
  }
};

template <class T>
inline T dot(const Vec3T<T>& a, const Vec3T<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
inline Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Column-major-free 3x3, stored row by row.
template <class T>
struct Mat3T {
  T m[3][3]{};

  static Mat3T identity(const T& one, const T& zero) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? one : zero;
    return r;
  }

  Vec3T<T> col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  Vec3T<T> row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }

  friend Vec3T<T> operator*(const Mat3T& A, const Vec3T<T>& v) {
    return {A.m[0][0] * v.x + A.m[0][1] * v.y + A.m[0][2] * v.z,
            A.m[1][0] * v.x + A.m[1][1] * v.y + A.m[1][2] * v.z,
            A.m[2][0] * v.x + A.m[2][1] * v.y + A.m[2][2] * v.z};
  }
  friend Mat3T operator*(const Mat3T& A, const Mat3T& B) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r.m[i][j] = A.m[i][0] * B.m[0][j] + A.m[i][1] * B.m[1][j] +
                    A.m[i][2] * B.m[2][j];
    return r;
  }
  friend Mat3T operator+(const Mat3T& A, const Mat3T& B) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = A.m[i][j] + B.m[i][j];
    return r;
  }
  friend Mat3T operator*(const T& s, const Mat3T& A) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = s * A.m[i][j];
    return r;
  }

  Mat3T transposed() const {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
};

// Transpose of v applied as rotation: multiply vector by A^T without forming it.
template <class T>
inline Vec3T<T> mul_transpose(const Mat3T<T>& A, const Vec3T<T>& v) {
  return {A.m[0][0] * v.x + A.m[1][0] * v.y + A.m[2][0] * v.z,
          A.m[0][1] * v.x + A.m[1][1] * v.y + A.m[2][1] * v.z,
          A.m[0][2] * v.x + A.m[1][2] * v.y + A.m[2][2] * v.z};
}

// Rodrigues rotation about unit axis `a` with precomputed sine/cosine.
template <class T>
inline Mat3T<T> axis_angle(const Vec3T<T>& a, const T& s, const T& c) {
  const T one_c = T(1.0) - c;
  Mat3T<T> r;
  r.m[0][0] = c + a.x * a.x * one_c;
  r.m[0][1] = a.x * a.y * one_c - a.z * s;
  r.m[0][2] = a.x * a.z * one_c + a.y * s;
  r.m[1][0] = a.y * a.x * one_c + a.z * s;
  r.m[1][1] = c + a.y * a.y * one_c;
  r.m[1][2] = a.y * a.z * one_c - a.x * s;
  r.m[2][0] = a.z * a.x * one_c - a.y * s;
  r.m[2][1] = a.z * a.y * one_c + a.x * s;
  r.m[2][2] = c + a.z * a.z * one_c;
  return r;
}

// R * I * R^T for a symmetric I.
template <class T>
inline Mat3T<T> rotate_inertia(const Mat3T<T>& R, const Mat3T<T>& I) {
  return R * I * R.transposed();
}

// (d.d) E - d d^T, the parallel-axis contribution per unit mass.
template <class T>
inline Mat3T<T> parallel_axis(const Vec3T<T>& d) {
  const T dd = dot(d, d);
  Mat3T<T> r;
  r.m[0][0] = dd - d.x * d.x;
  r.m[0][1] = -d.x * d.y;
  r.m[0][2] = -d.x * d.z;
  r.m[1][0] = -d.y * d.x;
  r.m[1][1] = dd - d.y * d.y;
  r.m[1][2] = -d.y * d.z;
  r.m[2][0] = -d.z * d.x;
  r.m[2][1] = -d.z * d.y;
  r.m[2][2] = dd - d.z * d.z;
  return r;
}

using Vec3d = Vec3T<double>;
using Mat3d = Mat3T<double>;

inline double norm(const Vec3d& v) { return std::sqrt(dot(v, v)); }

inline Vec3d normalized(const Vec3d& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

}  // namespace twistbeam
