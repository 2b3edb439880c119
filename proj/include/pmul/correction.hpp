#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pmul/matrix.hpp"

namespace pmul {

enum class CorrectionKind {
    RealMat,
    RealTransform,
    RealConv1D,
    RealConv2D,
    Complex4,
    Complex3,
    ComplexConv,
    Complex3Conv,
};

const char* correction_kind_name(CorrectionKind k);

/// Which operand role a per-side complex correction summarizes: Rows treats
/// the matrix rows as the a+jb factor, Cols treats the columns as the c+js
/// factor.
enum class Side { Rows, Cols };

struct StaleCorrectionError : Error {
    using Error::Error;
};

/// Precomputed correction terms, bound by content hash to the operand(s)
/// they summarize. Term names, per kind:
///   RealMat:       Sa (per row of A), Sb (per column of B)
///   RealTransform: Sw (per coefficient row)
///   RealConv1D/2D: Sw (single entry)
///   Complex4:      Sx and/or Sy (per row / per column); Sk for transforms
///   Complex3:      Sab,Sba (rows) and/or Scs,Ssc (cols); Sxk,Syk transforms
///   ComplexConv:   Sw (single real entry)
///   Complex3Conv:  Sw in cterms (single complex entry)
struct CorrectionSet {
    CorrectionKind kind;
    std::uint64_t hash_a = 0;
    std::uint64_t hash_b = 0;
    std::map<std::string, std::vector<Scalar>> terms;
    std::map<std::string, std::vector<CScalar>> cterms;

    const std::vector<Scalar>& term(const std::string& name) const;
    const std::vector<CScalar>& cterm(const std::string& name) const;
    const Scalar& scalar_term(const std::string& name) const { return term(name).at(0); }
    const CScalar& cscalar_term(const std::string& name) const { return cterm(name).at(0); }
};

// ---- real corrections -------------------------------------------------------

/// Sa_i = -sum_k a_ik^2 and Sb_j = -sum_k b_kj^2; M*N + N*P squarings.
CorrectionSet real_mat_corrections(const Matrix& a, const Matrix& b, OpLedger& led);
CorrectionSet real_mat_corrections(const Matrix& a, const Matrix& b);

/// Sw_k = -sum_i w_ki^2 per coefficient row.
CorrectionSet transform_corrections(const Matrix& w, OpLedger& led);
CorrectionSet transform_corrections(const Matrix& w);

/// Sw = -sum_i w_i^2 for a 1D kernel.
CorrectionSet conv_corrections(const std::vector<Scalar>& w, OpLedger& led);
CorrectionSet conv_corrections(const std::vector<Scalar>& w);

/// Sw = -sum_ij w_ij^2 for a 2D kernel.
CorrectionSet conv2d_corrections(const Matrix& w, OpLedger& led);
CorrectionSet conv2d_corrections(const Matrix& w);

// ---- complex corrections ----------------------------------------------------

/// 4-square family: -sum(|z|^2) per row (Sx) or per column (Sy).
CorrectionSet complex4_corrections(const CMatrix& x, Side side, OpLedger& led);
CorrectionSet complex4_corrections(const CMatrix& x, Side side);

/// 3-square family. Rows: Sab_h = sum(-(a+b)^2 + b^2), Sba_h = sum(-(a+b)^2 - a^2).
/// Cols: Scs_k = sum(-c^2 + (c+s)^2), Ssc_k = sum(-c^2 - (s-c)^2).
/// The (a+b)^2 / (c+s)-side squares are shared, 3 squarings per element.
CorrectionSet complex3_corrections(const CMatrix& x, Side side, OpLedger& led);
CorrectionSet complex3_corrections(const CMatrix& x, Side side);

/// Combined operand pair sets for the complex matmul kernels.
CorrectionSet cmatmul4_corrections(const CMatrix& x, const CMatrix& y, OpLedger& led);
CorrectionSet cmatmul4_corrections(const CMatrix& x, const CMatrix& y);
CorrectionSet cmatmul3_corrections(const CMatrix& x, const CMatrix& y, OpLedger& led);
CorrectionSet cmatmul3_corrections(const CMatrix& x, const CMatrix& y);

/// Transform coefficient corrections. 4-square: Sk = -sum_i(c_ki^2+s_ki^2)
/// per row k. 3-square: Sxk/Syk apply the c+js-side formulas across row k.
CorrectionSet ctransform4_corrections(const CMatrix& w, OpLedger& led);
CorrectionSet ctransform4_corrections(const CMatrix& w);
CorrectionSet ctransform3_corrections(const CMatrix& w, OpLedger& led);
CorrectionSet ctransform3_corrections(const CMatrix& w);

/// Complex convolution kernel corrections. 4-square: Sw = -sum(c_i^2+s_i^2)
/// (real). 3-square: Sw = sum((-c^2+(c+s)^2) + j(-c^2-(s-c)^2)) (complex).
CorrectionSet cconv4_corrections(const std::vector<CScalar>& w, OpLedger& led);
CorrectionSet cconv4_corrections(const std::vector<CScalar>& w);
CorrectionSet cconv3_corrections(const std::vector<CScalar>& w, OpLedger& led);
CorrectionSet cconv3_corrections(const std::vector<CScalar>& w);

// ---- per-sample shared terms -------------------------------------------------

enum class SampleTermVariant { Cpm, Cpm3 };

/// The per-sample subtrahend shared by all engine taps in one cycle:
///   real:  x^2
///   Cpm:   (x^2+y^2)(1+j)
///   Cpm3:  -(x+y)^2+y^2 + j(-(x+y)^2-x^2)
Scalar sample_common_term(const Scalar& x, OpLedger& led);
CScalar sample_common_term(const CScalar& x, SampleTermVariant variant, OpLedger& led);

// ---- cache -------------------------------------------------------------------

/// Memoizes correction sets by (kind, operand hashes). Reads are concurrent;
/// writes serialize on an internal mutex.
class CorrectionCache {
  public:
    using Key = std::tuple<CorrectionKind, std::string, std::uint64_t, std::uint64_t>;

    std::shared_ptr<const CorrectionSet> find(const Key& key) const;
    std::shared_ptr<const CorrectionSet> put(const Key& key, CorrectionSet set);

    template <typename Fn>
    std::shared_ptr<const CorrectionSet> get_or_compute(const Key& key, Fn&& fn) {
        if (auto hit = find(key)) return hit;
        return put(key, fn());
    }

    std::size_t size() const;

  private:
    mutable std::mutex mu_;
    std::map<Key, std::shared_ptr<const CorrectionSet>> entries_;
};

void require_fresh(const CorrectionSet& corr, CorrectionKind kind, std::uint64_t hash_a,
                   std::uint64_t hash_b = 0);

} // namespace pmul
