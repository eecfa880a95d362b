#pragma once

/*
 * Invariant sequences of Riordan involutions and pseudo-involutions, and
 * conjugators B with R = B^n D B^-n.
 *
 * For an involution R (R^2 = I) put U = RD, V = DR. Then
 *   R (U +- D)^n     = +-(U +- D)^n       first kind
 *   R^T (V^T +- D)^n = +-(V^T +- D)^n     second kind
 * For a pseudo-involution ((RD)^2 = I) the same holds with R +- D, R^T +- D
 * in place of U +- D, V^T +- D and RD, R^T D in place of R, R^T.
 *
 * First-kind columns are infinite; only their leading `order` entries are
 * produced. Second-kind columns are columns of an upper triangular matrix
 * and are therefore finitely supported and exact.
 */

#include <optional>
#include <string>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/report.hpp"
#include "riordan/riordan.hpp"

namespace riordan {

enum class InvariantKind { First, Second };
enum class InvolutionType { Involution, Pseudo };

struct InvariantCertificate {
    std::string matrix_id;
    SeqVec vector;
    InvariantKind kind = InvariantKind::First;
    int sign = 1;
    int checked_order = 0;
};

/// Columns 0 .. order-1 of (U +- D)^power, or (R +- D)^power for a pseudo-involution.
/// Throws NotInvolution / NotPseudoInvolution.
std::vector<SeqVec> build_first_kind(const RiordanPair& r, int power, int sign, InvolutionType type, int order);

/// Columns 0 .. order-1 of (V^T +- D)^power, or (R^T +- D)^power; finitely supported.
std::vector<SeqVec> build_second_kind(const RiordanPair& r, int power, int sign, InvolutionType type, int order);

/// Checks A v = sign v on [0, order) where A is R, RD, R^T or R^T D according to kind and type.
std::optional<Witness> check_invariant(const RiordanPair& r, const SeqVec& v, InvariantKind kind, int sign,
                                       InvolutionType type, int order);

/// Same check for many vectors against one section; column j uses signs[j % signs.size()].
std::optional<Witness> check_invariant_columns(const RiordanPair& r, const std::vector<SeqVec>& cols,
                                               InvariantKind kind, const std::vector<int>& signs,
                                               InvolutionType type, int order);

/// Builds the columns and certifies each one; throws InvalidArgument if a column fails.
std::vector<InvariantCertificate> certify_columns(const std::string& matrix_id, const RiordanPair& r, int power,
                                                  int sign, InvariantKind kind, InvolutionType type, int order);

/// (g + 1, x) for R = (g, x) with g(0) > 0. Throws NotAppellForm when f != x.
RiordanPair shift_by_identity(const RiordanPair& r);

/// ((g + 1)^power, x) for an involution R = (g, -x) with g(0) > 0.
/// Throws NotMinusOneAppell, NotInvolution or NonpositiveDiagonal.
RiordanPair conjugator(const RiordanPair& r, int power);

/// R = B D B^-1 in pair form and R B = B D on the order x order section.
std::optional<Witness> verify_conjugation(const RiordanPair& r, const RiordanPair& b, int order);

/// Dense conjugator for the shifted matrix: B = RD + I for an involution,
/// B = R + I for a pseudo-involution.
struct DenseConjugator {
    TriMatrix b;
    TriMatrix b_power;
    TriMatrix target; // R for an involution, RD for a pseudo-involution
    std::optional<RiordanPair> pair; // (g+1, x) form when the shifted matrix is Appell
};

/// Throws NotInvolution / NotPseudoInvolution, NonpositiveDiagonal.
DenseConjugator pseudo_conjugator(const RiordanPair& r, int power, InvolutionType type, int order);

/// target B^n = B^n D, and every diagonal entry of B^n is nonzero.
std::optional<Witness> verify_dense_conjugation(const DenseConjugator& c);

/// [x_0, y_1, x_2, y_3, ...] with x_j columns of (U+D)^n and y_j of (U-D)^n, U = RD.
TriMatrix interleaved_conjugator(const RiordanPair& r, int power, int order);

} // namespace riordan
