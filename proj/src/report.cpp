#include "tgrs/report.hpp"

#include <sstream>

namespace tgrs {

ClassificationReport classify_code(const TgrsCode& code) {
  ClassificationReport r;

  MdsResult mds = mds_fast(code);
  r.is_mds = mds.is_mds;
  r.witness_subset = mds.witness;

  try {
    DistanceResult dist = brute_min_distance(code);
    r.d = dist.d;
    r.defect = dist.defect;
  } catch (const guard_error& e) {
    r.notes.push_back(std::string("distance check skipped: ") + e.what());
  }

  try {
    NmdsResult nmds = nmds_check(code);
    r.is_nmds = nmds.is_nmds;
    r.code_defect_class = nmds.code_defect_class;
    r.dual_defect_class = nmds.dual_defect_class;
  } catch (const guard_error& e) {
    r.notes.push_back(std::string("near-MDS check skipped: ") + e.what());
  }

  if (code.params.n == 2 * code.params.k) {
    r.is_selfdual = selfdual_direct(code);
    r.selfdual_sufficient_ok = selfdual_sufficient(code).ok;
  }

  r.grs_status = grs_classify(code);
  r.schur_dim = schur_square_dim(generator(code));

  // cheap cross-checks between independently computed fields
  if (r.is_mds == r.witness_subset.has_value())
    throw internal_error("MDS flag disagrees with the witness subset");
  if (r.is_mds == (r.grs_status == GrsVerdict::NotMDS))
    throw internal_error("MDS flag disagrees with the membership verdict");
  if (r.defect && r.is_mds != (*r.defect == 0))
    throw internal_error("brute-force distance disagrees with the MDS flag");
  if (r.code_defect_class && r.is_mds != (*r.code_defect_class == 0))
    throw internal_error("defect class disagrees with the MDS flag");
  if (r.selfdual_sufficient_ok && *r.selfdual_sufficient_ok &&
      !(r.is_selfdual && *r.is_selfdual))
    throw internal_error("sufficient self-duality test not confirmed by G G^T");
  return r;
}

namespace {

ordered_json json_or_null(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

ordered_json json_or_null(const std::optional<std::size_t>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

ordered_json to_json(const ClassificationReport& r) {
  ordered_json doc;
  doc["is_mds"] = r.is_mds;
  if (r.witness_subset) {
    std::vector<std::size_t> oneb;
    for (std::size_t i : *r.witness_subset) oneb.push_back(i + 1);
    doc["witness_subset"] = oneb;
  } else {
    doc["witness_subset"] = nullptr;
  }
  doc["d"] = json_or_null(r.d);
  doc["defect"] = json_or_null(r.defect);
  doc["is_nmds"] = json_or_null(r.is_nmds);
  doc["code_defect_class"] = json_or_null(r.code_defect_class);
  doc["dual_defect_class"] = json_or_null(r.dual_defect_class);
  doc["is_selfdual"] = json_or_null(r.is_selfdual);
  doc["selfdual_sufficient"] = json_or_null(r.selfdual_sufficient_ok);
  doc["grs_status"] = to_string(r.grs_status);
  doc["schur_dim"] = r.schur_dim;
  doc["notes"] = r.notes;
  return doc;
}

ordered_json to_json(const CensusReport& r) {
  ordered_json doc;
  doc["total"] = r.total;
  doc["processed"] = r.processed;
  doc["complete"] = r.complete;
  doc["omega_count"] = r.omega_count;
  ordered_json members = ordered_json::array();
  for (const Matrix& m : r.sample_members) members.push_back(m.str());
  doc["sample_members"] = members;
  return doc;
}

namespace {

bool scalar_array(const ordered_json& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

// Matrix texts carry their own commas; lists of them read better one per line.
bool multiline_array(const ordered_json& a) {
  for (const auto& v : a)
    if (v.is_string() && v.get<std::string>().find(';') != std::string::npos) return true;
  return false;
}

void render_scalar(std::ostream& os, const ordered_json& v) {
  if (v.is_string())
    os << v.get<std::string>();
  else if (v.is_null())
    os << "-";
  else
    os << v.dump();
}

void render_value(std::ostream& os, const ordered_json& v, int depth) {
  std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << pad << it.key() << ":";
      if (it.value().is_object() ||
          (it.value().is_array() && (!scalar_array(it.value()) || multiline_array(it.value())))) {
        os << "\n";
        render_value(os, it.value(), depth + 1);
      } else if (it.value().is_array()) {
        os << " ";
        render_value(os, it.value(), 0);
        os << "\n";
      } else {
        os << " ";
        render_scalar(os, it.value());
        os << "\n";
      }
    }
  } else if (v.is_array()) {
    if (scalar_array(v) && !multiline_array(v)) {
      os << "[";
      bool first = true;
      for (const auto& e : v) {
        if (!first) os << ", ";
        first = false;
        render_scalar(os, e);
      }
      os << "]";
    } else {
      for (const auto& e : v) {
        if (!e.is_structured()) {
          os << pad << "- ";
          render_scalar(os, e);
          os << "\n";
        } else if (scalar_array(e) && !multiline_array(e)) {
          os << pad << "- ";
          render_value(os, e, 0);
          os << "\n";
        } else {
          os << pad << "-\n";
          render_value(os, e, depth + 1);
        }
      }
    }
  } else {
    render_scalar(os, v);
  }
}

}  // namespace

std::string render_text(const ordered_json& doc) {
  std::ostringstream os;
  render_value(os, doc, 0);
  return os.str();
}

std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  if (r.sample_members.empty()) return "";
  const Matrix& first = r.sample_members.front();
  bool lead = true;
  for (std::size_t i = 0; i < first.rows(); ++i)
    for (std::size_t j = 0; j < first.cols(); ++j) {
      if (!lead) os << ",";
      lead = false;
      os << "b_" << i << "_" << j;
    }
  os << "\n";
  const Field& f = first.field();
  for (const Matrix& m : r.sample_members) {
    lead = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!lead) os << ",";
        lead = false;
        os << f.str(m.at(i, j));
      }
    os << "\n";
  }
  return os.str();
}

}  // namespace tgrs
