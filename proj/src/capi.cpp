// C API over the core library: opaque handles, status codes, thread-local
// error messages. Exceptions never cross the boundary.

#include "bhcount.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "count.hpp"
#include "detmethod.hpp"
#include "factor.hpp"
#include "fit.hpp"
#include "poly.hpp"
#include "resolvent.hpp"

using namespace bhc;

struct bhc_poly {
    MultiPoly p;
};

struct bhc_report {
    CountReport r;
};

struct bhc_pomega_list {
    std::vector<PomegaCandidate> cands;
};

struct bhc_aux {
    AuxResult r;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
bhc_status guarded(Fn&& fn) {
    try {
        fn();
        return BHC_OK;
    } catch (const input_error& e) {
        g_last_error = e.what();
        return BHC_ERR_INPUT;
    } catch (const internal_error& e) {
        g_last_error = e.what();
        return BHC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BHC_ERR_INTERNAL;
    }
}

template <typename Fn>
char* guarded_string(Fn&& fn) {
    try {
        return dup_string(fn());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    std::string s(csv);
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        std::string item = s.substr(start, comma - start);
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
        start = comma + 1;
        if (comma == s.size()) break;
    }
    return out;
}

}  // namespace

extern "C" {

const char* bhc_last_error(void) { return g_last_error.c_str(); }

void bhc_string_free(char* s) { std::free(s); }

bhc_status bhc_poly_parse(const char* text, const char* vars_csv, bhc_poly** out) {
    return guarded([&] {
        if (!text || !vars_csv || !out) throw input_error("null argument");
        MultiPoly p = parse_poly(text, split_csv(vars_csv));
        *out = new bhc_poly{std::move(p)};
    });
}

void bhc_poly_free(bhc_poly* p) { delete p; }

char* bhc_poly_to_string(const bhc_poly* p) {
    return guarded_string([&] { return p->p.to_string(); });
}

int bhc_poly_num_vars(const bhc_poly* p) { return static_cast<int>(p->p.vars().size()); }

char* bhc_poly_norm(const bhc_poly* p) {
    return guarded_string([&] { return poly_norm(p->p).get_str(); });
}

bhc_status bhc_poly_is_irreducible(const bhc_poly* p, int* out) {
    return guarded([&] { *out = is_irreducible(p->p) ? 1 : 0; });
}

char* bhc_poly_factor(const bhc_poly* p) {
    return guarded_string([&] {
        Factorization fac = factor_multivariate(p->p);
        std::ostringstream os;
        os << "content\t" << fac.content.get_num().get_str();
        if (fac.content.get_den() != 1) os << "/" << fac.content.get_den().get_str();
        for (const auto& [f, m] : fac.factors) os << "\n" << m << "\t" << f.to_string();
        return os.str();
    });
}

char* bhc_count_rationals(int64_t B) {
    return guarded_string([&] { return count_rationals(B).get_str(); });
}

char* bhc_enumerate_rationals_text(int64_t B) {
    return guarded_string([&] {
        std::ostringstream os;
        bool first = true;
        for_each_rational(B, [&](const Rat& t) {
            if (!first) os << "\n";
            os << rat_to_string(t);
            first = false;
            return true;
        });
        return os.str();
    });
}

char* bhc_enumerate_projective_text(int64_t B, int dim) {
    return guarded_string([&] {
        std::ostringstream os;
        bool first = true;
        for_each_projective_point(B, dim, [&](const std::vector<mpz_class>& p) {
            if (!first) os << "\n";
            os << "(";
            for (size_t i = 0; i < p.size(); ++i) {
                if (i) os << ":";
                os << p[i].get_str();
            }
            os << ")";
            first = false;
            return true;
        });
        return os.str();
    });
}

bhc_status bhc_count_affine(const bhc_poly* f, const int64_t* bounds, size_t n,
                            bhc_report** out) {
    return guarded([&] {
        HeightBox box(std::vector<int64_t>(bounds, bounds + n));
        *out = new bhc_report{count_affine(f->p, box)};
    });
}

bhc_status bhc_count_projective(const bhc_poly* f, int64_t B, bhc_report** out) {
    return guarded([&] { *out = new bhc_report{count_projective(f->p, B)}; });
}

bhc_status bhc_count_biprojective(const bhc_poly* f, int64_t B1, int64_t B2, bhc_report** out) {
    return guarded([&] { *out = new bhc_report{count_biprojective(f->p, B1, B2)}; });
}

bhc_status bhc_count_reducible_special(const bhc_poly* f, const int64_t* bounds, size_t s,
                                       int include_zero, bhc_report** out) {
    return guarded([&] {
        HeightBox box(std::vector<int64_t>(bounds, bounds + s));
        *out = new bhc_report{count_reducible_special(f->p, box, include_zero != 0)};
    });
}

bhc_status bhc_count_root_special(const bhc_poly* f, int64_t B, int include_zero,
                                  int relax_leading, bhc_report** out) {
    return guarded([&] {
        *out = new bhc_report{count_root_special(f->p, B, include_zero != 0, relax_leading != 0)};
    });
}

char* bhc_schwartz_zippel_ceiling(const bhc_poly* f, int64_t B) {
    return guarded_string([&] { return schwartz_zippel_ceiling(f->p, B).get_str(); });
}

void bhc_report_free(bhc_report* r) { delete r; }

char* bhc_report_value(const bhc_report* r) {
    return guarded_string([&] { return r->r.value.get_str(); });
}

char* bhc_report_field(const bhc_report* r, const char* field) {
    return guarded_string([&]() -> std::string {
        std::string f(field ? field : "");
        if (f == "irreducible") return r->r.irreducible.get_str();
        if (f == "reducible") return r->r.reducible.get_str();
        if (f == "zero") return r->r.zero.get_str();
        if (f == "degree_drop") return r->r.degree_drop.get_str();
        if (f == "work") return r->r.work.get_str();
        throw input_error("unknown report field: " + f);
    });
}

int bhc_report_has_breakdown(const bhc_report* r) { return r->r.has_breakdown ? 1 : 0; }

bhc_status bhc_resolvent(const bhc_poly* g, int k, int j, bhc_poly** out) {
    return guarded([&] { *out = new bhc_poly{resolvent(g->p, k, j).poly}; });
}

bhc_status bhc_pomega(const bhc_poly* f, bhc_pomega_list** out) {
    return guarded([&] { *out = new bhc_pomega_list{pomega_set(f->p)}; });
}

void bhc_pomega_free(bhc_pomega_list* p) { delete p; }

size_t bhc_pomega_size(const bhc_pomega_list* p) { return p->cands.size(); }

int bhc_pomega_k(const bhc_pomega_list* p, size_t i) { return p->cands.at(i).k; }

int bhc_pomega_j(const bhc_pomega_list* p, size_t i) { return p->cands.at(i).j; }

char* bhc_pomega_factor(const bhc_pomega_list* p, size_t i) {
    return guarded_string([&] { return p->cands.at(i).factor.to_string(); });
}

bhc_status bhc_find_auxiliary(const bhc_poly* f, int64_t B1, int64_t B2, bhc_aux** out) {
    return guarded([&] { *out = new bhc_aux{find_auxiliary(f->p, B1, B2)}; });
}

void bhc_aux_free(bhc_aux* a) { delete a; }

char* bhc_aux_poly(const bhc_aux* a) {
    return guarded_string([&] { return a->r.g.to_string(); });
}

int bhc_aux_m1(const bhc_aux* a) { return a->r.M1; }

int bhc_aux_m2(const bhc_aux* a) { return a->r.M2; }

int64_t bhc_aux_points(const bhc_aux* a) { return static_cast<int64_t>(a->r.S_size); }

int64_t bhc_aux_rank(const bhc_aux* a) { return static_cast<int64_t>(a->r.k); }

int64_t bhc_aux_cols(const bhc_aux* a) { return static_cast<int64_t>(a->r.m); }

bhc_status bhc_fit_exponent(const double* b, const double* count, size_t n, double* slope,
                            double* intercept, double* residual) {
    return guarded([&] {
        std::vector<std::pair<double, double>> series;
        for (size_t i = 0; i < n; ++i) series.emplace_back(b[i], count[i]);
        FitResult r = fit_exponent(series);
        if (slope) *slope = r.slope;
        if (intercept) *intercept = r.intercept;
        if (residual) *residual = r.residual;
    });
}

}  // extern "C"
