package org.fixture;

class order_parser {}

class Sorted {}

enum Immutable { ONE }
