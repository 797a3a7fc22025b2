#include "minfill/json_io.hpp"

#include <vector>

#include "minfill/error.hpp"

namespace minfill {
namespace {

// DOM builder that stores floating-point literals verbatim.
class ExactSax : public nlohmann::json_sax<Json> {
 public:
  Json result;

  bool null() override { return put(Json(nullptr)); }
  bool boolean(bool v) override { return put(Json(v)); }
  bool number_integer(number_integer_t v) override { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(Json(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return put(Json(raw)); }
  bool string(string_t& v) override { return put(Json(v)); }
  bool binary(binary_t&) override { return put(Json(nullptr)); }

  bool start_object(std::size_t) override {
    stack_.push_back(put_ref(Json::object()));
    return true;
  }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    stack_.push_back(put_ref(Json::array()));
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    throw ParseError("malformed JSON at byte " + std::to_string(position) + ": " + ex.what());
  }

 private:
  bool put(Json v) {
    put_ref(std::move(v));
    return true;
  }
  Json* put_ref(Json v) {
    if (stack_.empty()) {
      result = std::move(v);
      return &result;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    top[pending_key_] = std::move(v);
    return &top[pending_key_];
  }

  std::vector<Json*> stack_;
  std::string pending_key_;
};

}  // namespace

Json parse_json_exact(std::string_view text) {
  ExactSax sax;
  Json::sax_parse(text.begin(), text.end(), &sax);
  return std::move(sax.result);
}

Rational rational_from_json(const Json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) {
      return Rational(mpz_class(value.dump(), 10));
    }
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or rational string");
}

}  // namespace minfill
