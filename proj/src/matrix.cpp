#include "dmm/matrix.hpp"

#include <charconv>

#include "dmm/error.hpp"
#include "dmm/signature.hpp"

namespace dmm {

std::string format_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

double NetMatrix::get(const PortName& row, const PortName& col) const {
  auto it = rows_.find(row);
  if (it == rows_.end()) return 0.0;
  auto jt = it->second.find(col);
  return jt == it->second.end() ? 0.0 : jt->second;
}

void NetMatrix::set(const Signature& sig, const PortName& row,
                    const PortName& col, double w) {
  if (row.dir != PortDir::input || col.dir != PortDir::output) {
    throw Error(ErrorCode::invalid_argument,
                "weight address must be (input row, output column), got " +
                    row.str() + " x " + col.str());
  }
  const Name& rk = sig.port_kind(row).kind_name;
  const Name& ck = sig.port_kind(col).kind_name;
  if (rk != ck) {
    throw Error(ErrorCode::cross_kind_weight,
                "row " + row.str() + " carries kind '" + rk.text() +
                    "' but column " + col.str() + " carries '" + ck.text() +
                    "'; such weights are identically zero");
  }
  if (w == 0.0) {
    auto it = rows_.find(row);
    if (it != rows_.end()) {
      it->second.erase(col);
      if (it->second.empty()) rows_.erase(it);
    }
    return;
  }
  rows_[row][col] = w;
}

void NetMatrix::add_scaled(const NetMatrix& other, double s) {
  if (s == 0.0) return;
  for (const auto& [r, row] : other.rows_) {
    auto& dst = rows_[r];
    for (const auto& [c, w] : row) {
      double nv = (dst.count(c) ? dst[c] : 0.0) + s * w;
      if (nv == 0.0) {
        dst.erase(c);
      } else {
        dst[c] = nv;
      }
    }
    if (dst.empty()) rows_.erase(r);
  }
}

void NetMatrix::add_entry_unchecked(const PortName& row, const PortName& col,
                                    double w) {
  auto& dst = rows_[row];
  double nv = (dst.count(col) ? dst[col] : 0.0) + w;
  if (nv == 0.0) {
    dst.erase(col);
    if (dst.empty()) rows_.erase(row);
  } else {
    dst[col] = nv;
  }
}

const NetMatrix::Row* NetMatrix::row(const PortName& r) const {
  auto it = rows_.find(r);
  return it == rows_.end() ? nullptr : &it->second;
}

std::size_t NetMatrix::entry_count() const {
  std::size_t n = 0;
  for (const auto& [r, row] : rows_) n += row.size();
  return n;
}

std::pair<std::set<PortName>, std::set<PortName>> NetMatrix::active_ports()
    const {
  std::pair<std::set<PortName>, std::set<PortName>> out;
  for (const auto& [r, row] : rows_) {
    out.first.insert(r);
    for (const auto& [c, w] : row) out.second.insert(c);
  }
  return out;
}

std::string NetMatrix::dump() const {
  std::string s;
  for (const auto& [r, row] : rows_) {
    for (const auto& [c, w] : row) {
      s += r.str();
      s += '\t';
      s += c.str();
      s += '\t';
      s += format_double(w);
      s += '\n';
    }
  }
  return s;
}

UpdateSpec UpdateSpec::make(const Signature& sig, MaskVector gamma,
                            MaskVector alpha, MaskVector beta, double gate) {
  if (!gamma.is_finite() || !beta.is_finite()) {
    throw Error(ErrorCode::malformed_mask,
                "gamma and beta must be finite row masks");
  }
  check_mask(sig, gamma, PortDir::input);
  check_mask(sig, beta, PortDir::input);
  check_mask(sig, alpha, PortDir::output);
  const std::optional<Name>* kinds[] = {&gamma.element_kind,
                                        &alpha.element_kind,
                                        &beta.element_kind};
  std::optional<Name> k;
  for (const auto* kk : kinds) {
    if (!kk->has_value()) continue;
    if (!k) {
      k = **kk;
    } else if (*k != **kk) {
      throw Error(ErrorCode::malformed_mask,
                  "update masks span kinds '" + k->text() + "' and '" +
                      (*kk)->text() + "'");
    }
  }
  return UpdateSpec{std::move(gamma), std::move(alpha), std::move(beta), gate};
}

std::map<PortName, double> left_multiply(const MaskVector& beta,
                                         const NetMatrix& A) {
  std::map<PortName, double> out;
  for (const auto& [k, bk] : beta.support) {
    const auto* row = A.row(k);
    if (!row) continue;
    for (const auto& [j, a] : *row) out[j] += bk * a;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0.0) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

NetMatrix update_kernel(const NetMatrix& A, const UpdateSpec& u) {
  NetMatrix delta;
  if (u.gate == 0.0 || u.gamma.support.empty()) return delta;
  const auto sigma = left_multiply(u.beta, A);
  if (sigma.empty()) return delta;
  for (const auto& [i, gi] : u.gamma.support) {
    for (const auto& [j, sj] : sigma) {
      // sigma's support is single-kind and matches alpha's kind, so the
      // all-ones tail contributes exactly 1 here.
      double aj = u.alpha.at_same_kind(j);
      double d = u.gate * gi * aj * sj;
      if (d != 0.0) delta.add_entry_unchecked(i, j, d);
    }
  }
  return delta;
}

}  // namespace dmm
