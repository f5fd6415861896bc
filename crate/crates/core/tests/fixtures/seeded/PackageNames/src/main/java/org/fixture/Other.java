package org.other;

class Other {}
