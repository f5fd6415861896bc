package org.fixture.util;

class Helper {}
