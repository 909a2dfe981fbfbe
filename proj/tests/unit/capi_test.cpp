#include <doctest.h>

#include <cstring>
#include <string>

#include "hweyl/hweyl.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  hw_string_free(s);
  return out;
}

std::string text(const hw_poly* p) {
  char* s = nullptr;
  REQUIRE(hw_poly_to_string(p, &s) == HW_OK);
  return take(s);
}

}  // namespace

TEST_SUITE("c api") {
  TEST_CASE("star product through handles") {
    hw_twist* k = nullptr;
    REQUIRE(hw_twist_parse("1", &k) == HW_OK);
    hw_poly *x = nullptr, *y = nullptr, *r = nullptr;
    REQUIRE(hw_poly_parse("x1", k, &x) == HW_OK);
    REQUIRE(hw_poly_parse("y1", k, &y) == HW_OK);
    REQUIRE(hw_star(k, x, y, &r) == HW_OK);
    CHECK(text(r) == "y1*x1 + x1 + 1");
    hw_poly_free(r);
    REQUIRE(hw_mul(x, y, &r) == HW_OK);
    CHECK(text(r) == "y1*x1 + 1");
    hw_poly_free(r);
    hw_poly_free(x);
    hw_poly_free(y);
    hw_twist_free(k);
  }

  TEST_CASE("error codes and messages") {
    hw_twist* k = nullptr;
    REQUIRE(hw_twist_zero(1, &k) == HW_OK);
    hw_poly* p = nullptr;
    CHECK(hw_poly_parse("x1 + + ", k, &p) == HW_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(hw_last_error_position() >= 0);
    CHECK(std::strlen(hw_last_error_message()) > 0);
    CHECK(hw_poly_parse("x2", k, &p) == HW_ERR_INDEX);
    CHECK(hw_last_error_position() == -1);

    hw_twist* k2 = nullptr;
    REQUIRE(hw_twist_parse("1,1", &k2) == HW_OK);
    hw_poly *a = nullptr, *b = nullptr, *r = nullptr;
    REQUIRE(hw_poly_parse("x1", k, &a) == HW_OK);
    REQUIRE(hw_poly_parse("x2", k2, &b) == HW_OK);
    CHECK(hw_mul(a, b, &r) == HW_ERR_DIMENSION);
    CHECK(hw_mul(a, nullptr, &r) == HW_ERR_ARGUMENT);
    CHECK(hw_twist_zero(0, &k) == HW_ERR_DIMENSION);

    hw_images* phi = nullptr;
    hw_twist* k1 = nullptr;
    REQUIRE(hw_twist_parse("1", &k1) == HW_OK);
    CHECK(hw_iso(k, k1, &phi) == HW_ERR_CLASSIFICATION);
    CHECK(std::string(hw_status_name(HW_ERR_CLASSIFICATION)) == "classification_error");

    hw_poly* zero = nullptr;
    REQUIRE(hw_poly_parse("0", k, &zero) == HW_OK);
    char* json = nullptr;
    CHECK(hw_reduce_json(k, zero, &json) == HW_ERR_ARGUMENT);

    for (hw_poly* q : {a, b, zero}) hw_poly_free(q);
    for (hw_twist* t : {k, k1, k2}) hw_twist_free(t);
  }

  TEST_CASE("isomorphism images and morphism check") {
    hw_twist *k = nullptr, *k2 = nullptr;
    REQUIRE(hw_twist_parse("2", &k) == HW_OK);
    REQUIRE(hw_twist_parse("3", &k2) == HW_OK);
    hw_images* phi = nullptr;
    REQUIRE(hw_iso(k, k2, &phi) == HW_OK);
    hw_poly* img = nullptr;
    REQUIRE(hw_images_get(phi, 'x', 1, &img) == HW_OK);
    CHECK(text(img) == "3/2*x1");
    hw_poly_free(img);
    CHECK(hw_images_get(phi, 'y', 2, &img) == HW_ERR_INDEX);

    int accepted = 0, agree = 0;
    char* json = nullptr;
    REQUIRE(hw_morphism_check_json(k, k2, phi, &accepted, &agree, &json) == HW_OK);
    CHECK(accepted == 1);
    CHECK(agree == 1);
    CHECK(take(json).find("\"checkers_agree\":true") != std::string::npos);
    hw_images_free(phi);
    hw_twist_free(k);
    hw_twist_free(k2);
  }

  TEST_CASE("deformation series") {
    hw_twist* k = nullptr;
    REQUIRE(hw_twist_zero(1, &k) == HW_OK);
    hw_poly *a = nullptr, *b = nullptr, *r = nullptr;
    REQUIRE(hw_poly_parse("y1", k, &a) == HW_OK);
    REQUIRE(hw_poly_parse("x1", k, &b) == HW_OK);
    const size_t pos[] = {1};
    hw_series* s = nullptr;
    REQUIRE(hw_deform_star(a, b, pos, 1, &s) == HW_OK);
    char* str = nullptr;
    REQUIRE(hw_series_to_string(s, &str) == HW_OK);
    CHECK(take(str) == "y1*x1 + t1*x1");
    const char* at[] = {"1"};
    REQUIRE(hw_series_specialize(s, at, 1, &r) == HW_OK);
    CHECK(text(r) == "y1*x1 + x1");
    const size_t bad[] = {2};
    hw_series* t = nullptr;
    CHECK(hw_deform_twist(a, bad, 1, &t) == HW_ERR_INDEX);
    hw_poly_free(r);
    hw_series_free(s);
    hw_poly_free(a);
    hw_poly_free(b);
    hw_twist_free(k);
  }

  TEST_CASE("self test") {
    int all = 0;
    char* json = nullptr;
    REQUIRE(hw_selftest_json(3, 2, 0.05, &all, &json) == HW_OK);
    CHECK(all == 1);
    CHECK(take(json).front() == '[');
  }
}
