namespace wg {}
